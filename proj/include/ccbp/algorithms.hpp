#ifndef CCBP_ALGORITHMS_HPP
#define CCBP_ALGORITHMS_HPP

#include "ccbp/packing.hpp"

namespace ccbp {

// An item fits a bin iff the load stays at most 1 (in every component) and
// the bin held at most k-1 items before. Both boundaries are inclusive:
// load exactly 1 with exactly k items is a legal bin.
bool fits(const Rational& load, int count, const Rational& size, int k);
bool fits_vector(const std::vector<Rational>& loads, int count,
                 const std::vector<Rational>& comps, int k);

// Next Fit: a single active bin; an item that does not fit closes it for
// good and opens a fresh one.
Packing next_fit(const Instance& inst);

// Worst Fit: the item goes to the feasible open bin of minimum load,
// breaking ties towards the lowest bin index; a new bin only when none fits.
Packing worst_fit(const Instance& inst);

// First Fit: the item goes to the lowest-indexed feasible bin.
Packing first_fit(const Instance& inst);

// First Fit over component vectors (d >= 1; requires components on every
// item). With d = 1 and components mirroring sizes this coincides with
// first_fit.
Packing first_fit_vector(const Instance& inst);

}  // namespace ccbp

#endif
