/**
 * @file kronecker.hpp
 * @brief Umbrella header for the library.
 */
#pragma once

#include "kronecker/field.hpp"
#include "kronecker/matrix.hpp"
#include "kronecker/linalg.hpp"
#include "kronecker/subspace.hpp"
#include "kronecker/grassmannian.hpp"
#include "kronecker/module.hpp"
#include "kronecker/hom.hpp"
#include "kronecker/forms.hpp"
#include "kronecker/test_modules.hpp"
#include "kronecker/decompose.hpp"
#include "kronecker/rank_props.hpp"
#include "kronecker/ar.hpp"
#include "kronecker/functors.hpp"
