#pragma once

#include "homlie/scalar.hpp"
#include "homlie/linalg.hpp"
#include "homlie/combinatorics.hpp"
#include "homlie/multilinear.hpp"
#include "homlie/structures.hpp"
#include "homlie/fixtures.hpp"
#include "homlie/differentials.hpp"
#include "homlie/brackets.hpp"
#include "homlie/operators.hpp"
#include "homlie/cohomology.hpp"
#include "homlie/deformations.hpp"
#include "homlie/theorem_suite.hpp"
#include "homlie/io.hpp"
