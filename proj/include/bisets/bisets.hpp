#pragma once

/// \file
/// Umbrella header.

#include "bisets/biset.hpp"
#include "bisets/case_spec.hpp"
#include "bisets/catalog.hpp"
#include "bisets/error.hpp"
#include "bisets/field.hpp"
#include "bisets/functor.hpp"
#include "bisets/group.hpp"
#include "bisets/intertwiner.hpp"
#include "bisets/mackey.hpp"
#include "bisets/matrix.hpp"
#include "bisets/product.hpp"
#include "bisets/quotient.hpp"
#include "bisets/rational.hpp"
#include "bisets/rep.hpp"
#include "bisets/report.hpp"
#include "bisets/sparse.hpp"
#include "bisets/sweep.hpp"
#include "bisets/tensor.hpp"
#include "bisets/theorem.hpp"
