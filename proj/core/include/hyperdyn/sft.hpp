#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperdyn/group.hpp"

namespace hyperdyn {

/// Two-sided subshift of finite type over alphabet {0, ..., k-1}, encoded
/// by a 0/1 transition matrix: entry (a, b) = 1 iff the word "ab" is
/// allowed. Non-essential symbols (empty row or column) are pruned at
/// construction, so every symbol extends to a bi-infinite sequence.
struct Sft {
  int k = 0;
  std::vector<std::uint32_t> rows;  // bit b of rows[a] = transition a -> b
  std::string name;

  bool allowed(int a, int b) const { return (rows[a] >> b) & 1; }
  bool word_allowed(const std::vector<int>& w) const;
};

/// Builds an SFT from forbidden words. Length-2 words zero matrix entries
/// directly; longer words go through the standard higher-block recoding.
/// Throws std::invalid_argument when the language is empty.
Sft sft_from_forbidden_words(int k, const std::vector<std::string>& words);

Sft sft_from_matrix(int k, const std::vector<std::vector<int>>& rows, std::string name = "sft");

/// Strong connectivity of the transition graph: exact transitivity oracle.
bool sft_is_irreducible(const Sft& m);

struct PrimitivityResult {
  bool primitive = false;
  int exponent = 0;  // least positive exponent with m^e entrywise positive
  int period = 0;    // graph period when not primitive
};

/// Primitivity up to the Wielandt bound (k-1)^2 + 1: exact mixing oracle.
PrimitivityResult sft_is_primitive(const Sft& m);

long long count_words_of_length(const Sft& m, int len);
long long trace_power(const Sft& m, int p);

/// Cylinder set: all points carrying the word starting at the anchor.
struct Cylinder {
  std::string word;
  long long anchor = 0;
};

/// All allowed words of length 1..L anchored at 0, shortest first, each
/// length block in lexicographic order.
std::vector<Cylinder> cylinders_up_to(const Sft& m, int L);

/// Finite intersection of shifted cylinders: a partial assignment of
/// coordinates to symbols. Empty pattern = the whole shift space.
struct Pattern {
  std::map<long long, int> cells;
};

Pattern cylinder_pattern(const Sft& m, const Cylinder& c);
/// Image of the pattern's point set under shift^n (x -> y with y_i = x_{i+n}).
Pattern shift_pattern(const Pattern& p, long long n);
std::optional<Pattern> merge_patterns(const Pattern& a, const Pattern& b);
/// Whether some point of the shift space realizes the pattern. Gaps reduce
/// to path existence in the transition graph; two-sided extension is free
/// because all symbols are essential.
bool pattern_fillable(const Sft& m, const Pattern& p);

/// A shift-periodic point: x_i = cycle[(i - phase) mod cycle.size()].
struct PeriodicSeqPoint {
  std::vector<int> cycle;
  long long phase = 0;
  int at(long long i) const;
  std::string str() const;
};

bool point_matches(const PeriodicSeqPoint& x, const Pattern& p);
/// First coordinate of disagreement by |i|, then sign; nullopt when equal
/// within the scanned window (periods bound the needed window).
std::optional<long long> first_disagreement(const PeriodicSeqPoint& x, const PeriodicSeqPoint& y);

/// Constructs a periodic point through a fillable pattern by closing the
/// filled block into a cycle of the transition graph. Requires a return
/// path from the last to the first constrained symbol.
std::optional<PeriodicSeqPoint> periodic_point_through(const Sft& m, const Pattern& p);

/// The finite subsystem of points whose period divides p: length-p cyclic
/// words respecting transitions (trace(m^p) of them), with the shift
/// metric 2^(-min |i| of disagreement) evaluated over one period window
/// and Z acting by the shift. Throws when trace(m^p) = 0.
ActionSystem periodic_subsystem(const Sft& m, int p);

}  // namespace hyperdyn
