#pragma once

// Exact-arithmetic toolkit for a family of quadratic algebras indexed by
// subsets of {1..n}: string combinatorics, free-algebra arithmetic, relation
// constructors, an exact quotient engine, Hilbert series identities and a
// verification layer that cross-checks them against each other.

#include "block_string.hpp"
#include "cache.hpp"
#include "families.hpp"
#include "free_algebra.hpp"
#include "jobs.hpp"
#include "linalg.hpp"
#include "numeric.hpp"
#include "presentations.hpp"
#include "quadratic.hpp"
#include "report.hpp"
#include "series.hpp"
#include "subset.hpp"
#include "verify.hpp"
