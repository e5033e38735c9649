#pragma once

#include "nakayama/algebra.hpp"
#include "nakayama/counting.hpp"
#include "nakayama/error.hpp"
#include "nakayama/homology.hpp"
#include "nakayama/hood.hpp"
#include "nakayama/io.hpp"
#include "nakayama/qh.hpp"
#include "nakayama/sweep.hpp"
