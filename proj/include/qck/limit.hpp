#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qck/finite.hpp"
#include "qck/tableau.hpp"

namespace qck {

enum class Largeness { not_dual_large, dual_large, dual_marginally_large };
std::string to_string(Largeness c);

/// Classification by how far the leading-letter runs exceed the row below.
Largeness largeness(const ShiftedTableau& t);
bool is_dml(const ShiftedTableau& t);

/// Adds (in) or removes (out) the letter n+1-k at the left of row k, for
/// k = 1..h. Removal requires each of those rows to start with that letter
/// and the result to keep a strict shape.
ShiftedTableau push_column(const ShiftedTableau& t, int h, bool in);

/// The unique dual marginally large tableau in t's trivial-column class.
/// Throws "not in a marginally large class" when unreachable.
ShiftedTableau canonicalize(const ShiftedTableau& t);
Grid canonicalize_grid(Grid rows, int n);

/// L^{-infinity}: the staircase with row k from the bottom filled with k.
ShiftedTableau limit_generator(int n);

/// Crystal operator on a dual marginally large tableau: the raw cell change
/// followed by canonicalization. For even indices, e is total here; f is
/// zero iff red_i has no surviving i. Odd zero-cases as in the finite case.
std::optional<ShiftedTableau> apply_limit(const ShiftedTableau& t, const OperatorLabel& op);

/// Enlargement map: prepends letter_increments[i-1] copies of the letter i
/// to row i from the bottom, creating a taller row on top when needed.
/// Sends L^eta to L^{eta'} and commutes with all crystal operators.
ShiftedTableau embed(const ShiftedTableau& t, const std::vector<int>& letter_increments);

/// Enlargement to a target shape: rows pair off from the bottom and row i
/// from the bottom gains target minus current boxes of the letter i.
ShiftedTableau embed_to(const ShiftedTableau& t, const Shape& target);

struct LimitStats {
  Weight wt;
  long long eps;
  long long phi;
};

/// Weight normalized so wt(L^{-infinity}) = 0: content minus the content of
/// the lowest filling of the same shape.
Weight limit_weight(const ShiftedTableau& t);
LimitStats limit_statistics(const ShiftedTableau& t, int i);

/// Representative of t's class with the requested shape, by pushing in
/// trivial columns only.
ShiftedTableau project(const ShiftedTableau& t, const Shape& shape);

}  // namespace qck
