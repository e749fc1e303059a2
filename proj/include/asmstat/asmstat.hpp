#pragma once

#include "asmstat/exact/bernoulli.hpp"
#include "asmstat/exact/faulhaber.hpp"
#include "asmstat/exact/polynomial.hpp"
#include "asmstat/exact/power_series.hpp"
#include "asmstat/exact/rational.hpp"
#include "asmstat/exact/stirling.hpp"
#include "asmstat/exact/zeta.hpp"

#include "asmstat/asms/asm.hpp"
#include "asmstat/asms/count.hpp"
#include "asmstat/asms/enumerate.hpp"
#include "asmstat/asms/monotone_triangle.hpp"
#include "asmstat/asms/observable.hpp"
#include "asmstat/asms/text_format.hpp"

#include "asmstat/stats/cumulants.hpp"
#include "asmstat/stats/density.hpp"
#include "asmstat/stats/distribution.hpp"

#include "asmstat/formulas/asymptotic.hpp"
#include "asmstat/formulas/discrepancy.hpp"
#include "asmstat/formulas/egf.hpp"
#include "asmstat/formulas/moments.hpp"
