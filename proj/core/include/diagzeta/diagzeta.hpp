#pragma once

#include "diagzeta/classnum.hpp"
#include "diagzeta/count.hpp"
#include "diagzeta/curve.hpp"
#include "diagzeta/errors.hpp"
#include "diagzeta/ff.hpp"
#include "diagzeta/maximality.hpp"
#include "diagzeta/numeric.hpp"
#include "diagzeta/report.hpp"
#include "diagzeta/verify.hpp"
#include "diagzeta/zeta.hpp"
