#pragma once

#include <memory>
#include <optional>
#include <string>

#include "qck/limit.hpp"

namespace qck {

/// Element of any crystal this library builds: a finite tableau, a limit
/// tableau, one of the single-element crystals t_lambda / r^vee_lambda, or a
/// binary tensor of elements.
class CrystalElement {
 public:
  enum class Kind { finite, limit, tmarker, rmarker, tensor };

  static CrystalElement finite(ShiftedTableau t);
  static CrystalElement limit(ShiftedTableau t);
  static CrystalElement t_marker(Weight lam);
  static CrystalElement r_marker(Weight lam);
  static CrystalElement tensor(CrystalElement left, CrystalElement right);

  Kind kind() const { return kind_; }
  int rank() const { return n_; }
  const ShiftedTableau& tableau() const;
  const Weight& marker_weight() const;
  const CrystalElement& left() const;
  const CrystalElement& right() const;

  /// Canonical string form; element identity for hashing and ordering.
  std::string repr() const;

  bool operator==(const CrystalElement& o) const { return repr() == o.repr(); }
  bool operator!=(const CrystalElement& o) const { return !(*this == o); }

 private:
  CrystalElement(Kind k, int n) : kind_(k), n_(n) {}
  Kind kind_;
  int n_;
  std::shared_ptr<const ShiftedTableau> tab_;
  Weight lam_;
  std::shared_ptr<const CrystalElement> left_, right_;
};

Weight weight(const CrystalElement& b);
ExtInt eps(const CrystalElement& b, int i);
ExtInt phi(const CrystalElement& b, int i);

/// Crystal operator with the tensor product rule; nullopt is the zero.
std::optional<CrystalElement> apply(const CrystalElement& b, const OperatorLabel& op);

}  // namespace qck
