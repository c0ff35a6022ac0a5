#pragma once

#include "hopf/errors.hpp"
#include "hopf/scalar.hpp"
#include "hopf/matrix.hpp"
#include "hopf/lincomb.hpp"
#include "hopf/series.hpp"
#include "hopf/graded.hpp"
#include "hopf/basis.hpp"
#include "hopf/algebra.hpp"
#include "hopf/monomial.hpp"
#include "hopf/words.hpp"
#include "hopf/fv_module.hpp"
#include "hopf/hopf_ops.hpp"
#include "hopf/free_cofree.hpp"
#include "hopf/gallery.hpp"
#include "hopf/theorems.hpp"
#include "hopf/poincare.hpp"
#include "hopf/io.hpp"
