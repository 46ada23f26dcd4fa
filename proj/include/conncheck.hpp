#pragma once

#include "conncheck/error.hpp"
#include "conncheck/field.hpp"
#include "conncheck/monomial.hpp"
#include "conncheck/polynomial.hpp"
#include "conncheck/groebner.hpp"
#include "conncheck/ideal.hpp"
#include "conncheck/ring_map.hpp"
#include "conncheck/presented_ring.hpp"
#include "conncheck/factor.hpp"
#include "conncheck/minimal_primes.hpp"
#include "conncheck/parallel.hpp"
#include "conncheck/spectrum_graphs.hpp"
#include "conncheck/stanley_reisner.hpp"
#include "conncheck/s2_fractions.hpp"
