// Range caps for the enumeration-backed operations, kept in one place.

#pragma once

namespace twobridge::limits {

// Words have at least three runs; below that the word model is undefined.
inline constexpr int min_crossing_number = 3;

// Hard guard for full T(c) enumeration: 2^{c-2} candidate run sequences.
// c = 26 is ~17M candidates, a few seconds of work; beyond that the caller
// is asking for an overnight job and gets rejected instead.
inline constexpr int max_enumeration_c = 26;

// Palindromic-type enumeration only walks the free half of the run
// sequence (2^{c/2} candidates), so it can go much further.
inline constexpr int max_palindromic_c = 50;

// Default range for the CLI verify command; the full identity suite over
// [3,14] runs in well under a minute on anything.
inline constexpr int default_verify_min = 3;
inline constexpr int default_verify_max = 14;

}  // namespace twobridge::limits
