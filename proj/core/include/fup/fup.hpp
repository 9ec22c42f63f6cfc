#pragma once

#include "fup/bounds.hpp"
#include "fup/cantor.hpp"
#include "fup/eigen.hpp"
#include "fup/errors.hpp"
#include "fup/fock.hpp"
#include "fup/kernels.hpp"
#include "fup/parallel.hpp"
#include "fup/quadrature.hpp"
#include "fup/report_io.hpp"
#include "fup/special.hpp"
#include "fup/summation.hpp"
