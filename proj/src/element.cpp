#include "qck/element.hpp"

#include <stdexcept>

namespace qck {

CrystalElement CrystalElement::finite(ShiftedTableau t) {
  CrystalElement e(Kind::finite, t.rank());
  e.tab_ = std::make_shared<const ShiftedTableau>(std::move(t));
  return e;
}

CrystalElement CrystalElement::limit(ShiftedTableau t) {
  if (!is_dml(t)) throw std::invalid_argument("limit element must be dual marginally large");
  CrystalElement e(Kind::limit, t.rank());
  e.tab_ = std::make_shared<const ShiftedTableau>(std::move(t));
  return e;
}

CrystalElement CrystalElement::t_marker(Weight lam) {
  CrystalElement e(Kind::tmarker, static_cast<int>(lam.size()));
  e.lam_ = std::move(lam);
  return e;
}

CrystalElement CrystalElement::r_marker(Weight lam) {
  CrystalElement e(Kind::rmarker, static_cast<int>(lam.size()));
  e.lam_ = std::move(lam);
  return e;
}

CrystalElement CrystalElement::tensor(CrystalElement left, CrystalElement right) {
  if (left.rank() != right.rank()) throw std::invalid_argument("tensor rank mismatch");
  CrystalElement e(Kind::tensor, left.rank());
  e.left_ = std::make_shared<const CrystalElement>(std::move(left));
  e.right_ = std::make_shared<const CrystalElement>(std::move(right));
  return e;
}

const ShiftedTableau& CrystalElement::tableau() const {
  if (!tab_) throw std::logic_error("element holds no tableau");
  return *tab_;
}

const Weight& CrystalElement::marker_weight() const {
  if (kind_ != Kind::tmarker && kind_ != Kind::rmarker) throw std::logic_error("not a marker");
  return lam_;
}

const CrystalElement& CrystalElement::left() const {
  if (!left_) throw std::logic_error("not a tensor");
  return *left_;
}

const CrystalElement& CrystalElement::right() const {
  if (!right_) throw std::logic_error("not a tensor");
  return *right_;
}

std::string CrystalElement::repr() const {
  switch (kind_) {
    case Kind::finite: return "F[" + tab_->repr() + "]";
    case Kind::limit: return "L[" + tab_->repr() + "]";
    case Kind::tmarker: return "t" + to_string(lam_);
    case Kind::rmarker: return "r" + to_string(lam_);
    case Kind::tensor: return "(" + left_->repr() + ")x(" + right_->repr() + ")";
  }
  return "?";
}

Weight weight(const CrystalElement& b) {
  switch (b.kind()) {
    case CrystalElement::Kind::finite: return content(b.tableau());
    case CrystalElement::Kind::limit: return limit_weight(b.tableau());
    case CrystalElement::Kind::tmarker:
    case CrystalElement::Kind::rmarker: return b.marker_weight();
    case CrystalElement::Kind::tensor: return add(weight(b.left()), weight(b.right()));
  }
  throw std::logic_error("bad kind");
}

ExtInt eps(const CrystalElement& b, int i) {
  switch (b.kind()) {
    case CrystalElement::Kind::finite: return ExtInt::of(eps_finite(b.tableau(), i));
    case CrystalElement::Kind::limit: return ExtInt::of(limit_statistics(b.tableau(), i).eps);
    case CrystalElement::Kind::tmarker: return ExtInt::neg_inf();
    case CrystalElement::Kind::rmarker: return ExtInt::of(0);
    case CrystalElement::Kind::tensor: {
      // eps(b (x) c) = max(eps(c), eps(b) - wt_i(c))
      ExtInt eb = eps(b.left(), i), ec = eps(b.right(), i);
      return ext_max(ec, eb.plus(-wt_i(weight(b.right()), i)));
    }
  }
  throw std::logic_error("bad kind");
}

ExtInt phi(const CrystalElement& b, int i) {
  switch (b.kind()) {
    case CrystalElement::Kind::finite: return ExtInt::of(phi_finite(b.tableau(), i));
    case CrystalElement::Kind::limit: return ExtInt::of(limit_statistics(b.tableau(), i).phi);
    case CrystalElement::Kind::tmarker: return ExtInt::neg_inf();
    case CrystalElement::Kind::rmarker: {
      const Weight& lam = b.marker_weight();
      return ExtInt::of(wt_i(lam, i));
    }
    case CrystalElement::Kind::tensor: {
      // phi(b (x) c) = max(phi(b), phi(c) + wt_i(b))
      ExtInt pb = phi(b.left(), i), pc = phi(b.right(), i);
      return ext_max(pb, pc.plus(wt_i(weight(b.left()), i)));
    }
  }
  throw std::logic_error("bad kind");
}

namespace {

bool odd_annihilated(const CrystalElement& b) {
  return !apply(b, {'e', -1}) && !apply(b, {'f', -1});
}

}  // namespace

std::optional<CrystalElement> apply(const CrystalElement& b, const OperatorLabel& op) {
  switch (b.kind()) {
    case CrystalElement::Kind::finite: {
      auto r = apply_finite(b.tableau(), op);
      if (!r) return std::nullopt;
      return CrystalElement::finite(std::move(*r));
    }
    case CrystalElement::Kind::limit: {
      auto r = apply_limit(b.tableau(), op);
      if (!r) return std::nullopt;
      return CrystalElement::limit(std::move(*r));
    }
    case CrystalElement::Kind::tmarker:
    case CrystalElement::Kind::rmarker: return std::nullopt;
    case CrystalElement::Kind::tensor: {
      const CrystalElement& l = b.left();
      const CrystalElement& r = b.right();
      bool act_left;
      if (op.index == -1) {
        act_left = !odd_annihilated(l);
      } else {
        ExtInt pr = phi(r, op.index), el = eps(l, op.index);
        act_left = op.kind == 'e' ? pr < el : pr <= el;
      }
      if (act_left) {
        auto nl = apply(l, op);
        if (!nl) return std::nullopt;
        return CrystalElement::tensor(std::move(*nl), r);
      }
      auto nr = apply(r, op);
      if (!nr) return std::nullopt;
      return CrystalElement::tensor(l, std::move(*nr));
    }
  }
  throw std::logic_error("bad kind");
}

}  // namespace qck
