#include "gring/pi0.hpp"

#include <algorithm>
#include <numeric>

#include "gring/checked.hpp"

namespace gring {

namespace {

void swap_rows(IntMatrix& m, Eigen::Index a, Eigen::Index b) { m.row(a).swap(m.row(b)); }
void swap_cols(IntMatrix& m, Eigen::Index a, Eigen::Index b) { m.col(a).swap(m.col(b)); }

void add_row(IntMatrix& m, Eigen::Index to, Eigen::Index from, Int factor) {
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    m(to, c) = checked_add(m(to, c), checked_mul(factor, m(from, c)));
}

void add_col(IntMatrix& m, Eigen::Index to, Eigen::Index from, Int factor) {
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    m(r, to) = checked_add(m(r, to), checked_mul(factor, m(r, from)));
}

// True when every off-pivot entry of row/column s vanishes.
bool is_isolated(const IntMatrix& d, Eigen::Index s) {
  for (Eigen::Index r = s + 1; r < d.rows(); ++r)
    if (d(r, s) != 0) return false;
  for (Eigen::Index c = s + 1; c < d.cols(); ++c)
    if (d(s, c) != 0) return false;
  return true;
}

bool find_min_nonzero(const IntMatrix& d, Eigen::Index s, Eigen::Index& row, Eigen::Index& col) {
  Int best = 0;
  bool found = false;
  for (Eigen::Index r = s; r < d.rows(); ++r)
    for (Eigen::Index c = s; c < d.cols(); ++c) {
      const Int v = d(r, c) < 0 ? -d(r, c) : d(r, c);
      if (v != 0 && (!found || v < best)) {
        best = v;
        row = r;
        col = c;
        found = true;
      }
    }
  return found;
}

}  // namespace

SmithNormalForm smith_normal_form(const IntMatrix& input) {
  const Eigen::Index rows = input.rows(), cols = input.cols();
  SmithNormalForm out;
  out.left = IntMatrix::Identity(rows, rows);
  out.right = IntMatrix::Identity(cols, cols);
  IntMatrix d = input;
  const Eigen::Index steps = std::min(rows, cols);

  for (Eigen::Index s = 0; s < steps; ++s) {
    Eigen::Index prow = s, pcol = s;
    if (!find_min_nonzero(d, s, prow, pcol)) break;  // the rest is zero
    swap_rows(d, s, prow);
    swap_rows(out.left, s, prow);
    swap_cols(d, s, pcol);
    swap_cols(out.right, s, pcol);

    while (true) {
      // Clear the pivot row and column.
      for (Eigen::Index r = s + 1; r < rows; ++r) {
        if (d(r, s) == 0) continue;
        const Int q = d(r, s) / d(s, s);
        if (q != 0) {
          add_row(d, r, s, -q);
          add_row(out.left, r, s, -q);
        }
      }
      for (Eigen::Index c = s + 1; c < cols; ++c) {
        if (d(s, c) == 0) continue;
        const Int q = d(s, c) / d(s, s);
        if (q != 0) {
          add_col(d, c, s, -q);
          add_col(out.right, c, s, -q);
        }
      }
      if (!is_isolated(d, s)) {
        // Residues remain; move the smallest to the pivot and repeat.
        Eigen::Index r = s, c = s;
        find_min_nonzero(d, s, r, c);
        swap_rows(d, s, r);
        swap_rows(out.left, s, r);
        swap_cols(d, s, c);
        swap_cols(out.right, s, c);
        continue;
      }
      // Pivot isolated; enforce divisibility of the remaining block.
      Eigen::Index br = -1;
      bool divides = true;
      for (Eigen::Index r = s + 1; r < rows && divides; ++r)
        for (Eigen::Index c = s + 1; c < cols && divides; ++c)
          if (d(r, c) % d(s, s) != 0) {
            br = r;
            divides = false;
          }
      if (divides) break;
      add_row(d, s, br, 1);
      add_row(out.left, s, br, 1);
      // The pivot row now carries the offending entry; clearing resumes.
    }

    if (d(s, s) < 0) {
      d.row(s) *= -1;
      out.left.row(s) *= -1;
    }
  }

  out.diagonal.resize(static_cast<std::size_t>(steps));
  for (Eigen::Index s = 0; s < steps; ++s) out.diagonal[s] = d(s, s);
  return out;
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw input_error("determinant: matrix is not square");
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination; every division is exact.
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (Eigen::Index s = 0; s < n - 1; ++s) {
    if (a(s, s) == 0) {
      Eigen::Index pivot = -1;
      for (Eigen::Index r = s + 1; r < n; ++r)
        if (a(r, s) != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) return 0;
      a.row(s).swap(a.row(pivot));
      sign = -sign;
    }
    for (Eigen::Index r = s + 1; r < n; ++r)
      for (Eigen::Index c = s + 1; c < n; ++c) {
        const Int num = checked_sub(checked_mul(a(r, c), a(s, s)), checked_mul(a(r, s), a(s, c)));
        a(r, c) = num / prev;
      }
    prev = a(s, s);
  }
  return checked_mul(sign, a(n - 1, n - 1));
}

std::vector<Int> AbelianPresentation::class_of(const Element& x) const {
  if (x.level != 1) throw input_error("class_of: element must live at level 1");
  const Eigen::Index g = static_cast<Eigen::Index>(generators.size());
  IntVector coords = IntVector::Zero(g);
  if (const auto it = index_.find(x); it != index_.end()) {
    coords = snf.left.col(it->second);
  } else if (x != basepoint_) {
    throw input_error("class_of: element is not in the presented carrier");
  }
  std::vector<Int> out(static_cast<std::size_t>(g));
  for (Eigen::Index i = 0; i < g; ++i) {
    const Int f = factors[static_cast<std::size_t>(i)];
    out[static_cast<std::size_t>(i)] = f > 0 ? ((coords(i) % f) + f) % f : coords(i);
  }
  return out;
}

std::vector<Int> AbelianPresentation::nontrivial_factors() const {
  std::vector<Int> out;
  for (Int f : factors)
    if (f != 1) out.push_back(f);
  return out;
}

AbelianPresentation pi0(const GammaRingModel& model) {
  if (!model.carrier_size(1).has_value() || !model.carrier_size(2).has_value())
    throw unsupported_error(model.name() + ": pi0 needs finite carriers at levels 1 and 2");

  AbelianPresentation pres;
  const auto base1 = model.basepoint(1);
  pres.basepoint_ = base1;
  for (const auto& x : model.enumerate(1)) {
    if (x == base1) continue;
    pres.index_[x] = static_cast<int>(pres.generators.size());
    pres.generators.push_back(x);
  }

  const auto p21 = restriction(2, 1);
  const auto p22 = restriction(2, 2);
  const auto s = summing(2, 1, 2, 1);
  const auto base2 = model.basepoint(2);
  std::vector<std::vector<Int>> rows;
  for (const auto& x : model.enumerate(2)) {
    if (x == base2) continue;
    std::vector<Int> row(pres.generators.size(), 0);
    auto bump = [&](const Element& y, Int delta) {
      if (y == base1) return;
      row[static_cast<std::size_t>(pres.index_.at(y))] += delta;
    };
    bump(model.induce(p22, x), 1);
    bump(model.induce(p21, x), 1);
    bump(model.induce(s, x), -1);
    rows.push_back(std::move(row));
  }

  const Eigen::Index g = static_cast<Eigen::Index>(pres.generators.size());
  pres.relations = IntMatrix::Zero(static_cast<Eigen::Index>(rows.size()), g);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (Eigen::Index c = 0; c < g; ++c)
      pres.relations(static_cast<Eigen::Index>(r), c) = rows[r][static_cast<std::size_t>(c)];

  pres.snf = smith_normal_form(pres.relations.transpose());
  pres.factors.assign(static_cast<std::size_t>(g), 0);
  for (std::size_t i = 0; i < pres.snf.diagonal.size(); ++i) pres.factors[i] = pres.snf.diagonal[i];

  pres.unit_class = pres.class_of(model.unit());
  pres.unit_class_is_basepoint_class = pres.unit_class == pres.class_of(base1);
  return pres;
}

bool is_strict(const AbelianPresentation& pres, const Element& a) {
  return pres.class_of(a) == pres.unit_class;
}

std::vector<LawHom> law_homomorphisms(const GammaRingModel& model,
                                      const AbelianPresentation& pres, const Element& r1,
                                      const Element& r2) {
  if (r1.level != 2 || r2.level != 2)
    throw input_error(model.name() + ": law homomorphisms connect level-2 elements");
  if (!model.carrier_size(1).has_value())
    throw unsupported_error(model.name() + ": law_homomorphisms needs a finite R[1]");

  const auto carrier = model.enumerate(1);
  const auto one = model.unit();
  std::vector<LawHom> out;
  for (const auto& a : carrier) {
    if (model.mult(a, r1) != model.mult(r2, a)) continue;
    LawHom hom{a, false, false, false, false};
    for (const auto& b : carrier) {
      const bool left = model.mult(b, a) == one;
      const bool right = model.mult(a, b) == one;
      hom.left_invertible |= left;
      hom.right_invertible |= right;
      hom.invertible |= left && right;
    }
    hom.strict = hom.invertible && is_strict(pres, a);
    out.push_back(std::move(hom));
  }
  return out;
}

}  // namespace gring
