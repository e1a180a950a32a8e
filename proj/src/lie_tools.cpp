#include "cylie/lie_tools.hpp"

#include <algorithm>
#include <numeric>

namespace cylie {

namespace {

Mat stack_columns(const std::vector<Mat>& cols, int rows, Ring ring) {
  Mat m(rows, int(cols.size()), ring);
  for (int j = 0; j < int(cols.size()); ++j)
    for (int i = 0; i < rows; ++i) m = m.with_entry(i, j, cols[j].at(i, 0));
  return m;
}

}  // namespace

Subalgebra Subalgebra::from_basis(std::vector<Mat> basis, const HodgeFrame& frame) {
  std::vector<Mat> cols;
  cols.reserve(basis.size());
  for (const auto& b : basis) {
    if (!in_sp(b, frame, SpLevel::algebra))
      throw Error(ErrorKind::ShapeMismatch, "basis element outside the real symplectic algebra");
    cols.push_back(chart_vec(b, frame));
  }
  Ring ring = Ring::Rational;
  for (const auto& c : cols) ring = ring_join(ring, c.ring());
  Mat coords = stack_columns(cols, 16, ring);
  if (!basis.empty() && rank(coords) != int(basis.size()))
    throw Error(ErrorKind::ShapeMismatch, "basis is linearly dependent in the chart");
  return Subalgebra(std::move(basis), std::move(coords), frame);
}

std::optional<Mat> Subalgebra::coordinates_of(const Mat& m) const {
  Mat v = chart_vec(m, frame_);
  if (dim() == 0) return v.is_zero() ? std::optional<Mat>(Mat(0, 1)) : std::nullopt;
  return solve(coords_, v);
}

bool Subalgebra::contains(const Mat& m) const { return coordinates_of(m).has_value(); }

Mat Subalgebra::element(const Mat& coeffs) const {
  if (coeffs.rows() != dim() || coeffs.cols() != 1)
    throw Error(ErrorKind::ShapeMismatch, "coefficient column of wrong length");
  Mat acc(4, 4);
  for (int m = 0; m < dim(); ++m) acc = acc + coeffs.at(m, 0) * basis_[m];
  return acc;
}

Subalgebra sp_basis(const HodgeFrame& frame) {
  // Solve X^T Qc + Qc X = 0 on the 16 chart entries; reality is automatic
  // in the chart.
  Mat b = chart_basis(frame);
  Mat qc = demote(b.transpose() * frame.q * b);
  Mat sys(16, 16);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      int row = 4 * i + j;
      for (int a = 0; a < 4; ++a) {
        // sum_k X(k,i) Qc(k,j): unknown (a, i) picks up Qc(a, j)
        sys = sys.with_entry(row, 4 * a + i, sys.at(row, 4 * a + i) + qc.at(a, j));
        // sum_k Qc(i,k) X(k,j): unknown (a, j) picks up Qc(i, a)
        sys = sys.with_entry(row, 4 * a + j, sys.at(row, 4 * a + j) + qc.at(i, a));
      }
    }
  std::vector<Mat> basis;
  for (const Mat& v : kernel_basis(sys)) {
    Mat chart(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) chart = chart.with_entry(i, j, v.at(4 * i + j, 0));
    basis.push_back(from_chart(chart, frame));
  }
  return Subalgebra::from_basis(std::move(basis), frame);
}

Subalgebra centralizer(const std::vector<Mat>& gens, const Subalgebra& ambient) {
  int n = ambient.dim();
  const HodgeFrame& frame = ambient.frame();
  std::vector<Mat> gen_charts;
  for (const auto& g : gens) gen_charts.push_back(to_chart(g, frame));
  std::vector<Mat> basis_charts;
  for (const auto& bmat : ambient.basis()) basis_charts.push_back(to_chart(bmat, frame));

  Ring ring = Ring::Rational;
  std::vector<std::vector<Mat>> bracket_vecs(gens.size());
  for (size_t gi = 0; gi < gens.size(); ++gi) {
    for (int m = 0; m < n; ++m) {
      Mat br = chart_vec_of_chart(commutator(basis_charts[m], gen_charts[gi]));
      ring = ring_join(ring, br.ring());
      bracket_vecs[gi].push_back(br);
    }
  }
  Mat sys(16 * int(gens.size()), n, ring);
  for (size_t gi = 0; gi < gens.size(); ++gi)
    for (int m = 0; m < n; ++m)
      for (int r = 0; r < 16; ++r)
        sys = sys.with_entry(int(gi) * 16 + r, m, bracket_vecs[gi][m].at(r, 0));

  std::vector<Mat> basis;
  for (const Mat& c : kernel_basis(sys)) basis.push_back(ambient.element(c));
  return Subalgebra::from_basis(std::move(basis), frame);
}

bool closure_check(const Subalgebra& s) {
  for (int i = 0; i < s.dim(); ++i)
    for (int j = i + 1; j < s.dim(); ++j)
      if (!s.contains(commutator(s.basis()[i], s.basis()[j]))) return false;
  return true;
}

Subalgebra derived_subalgebra(const Subalgebra& s) {
  std::vector<Mat> picked;
  std::vector<Mat> picked_vecs;
  int current_rank = 0;
  for (int i = 0; i < s.dim(); ++i)
    for (int j = i + 1; j < s.dim(); ++j) {
      Mat br = commutator(s.basis()[i], s.basis()[j]);
      Mat v = chart_vec(br, s.frame());
      if (v.is_zero()) continue;
      std::vector<Mat> trial = picked_vecs;
      trial.push_back(v);
      Ring ring = Ring::Rational;
      for (const auto& c : trial) ring = ring_join(ring, c.ring());
      int r = rank(stack_columns(trial, 16, ring));
      if (r > current_rank) {
        picked.push_back(br);
        picked_vecs.push_back(v);
        current_rank = r;
      }
    }
  return Subalgebra::from_basis(std::move(picked), s.frame());
}

Subalgebra subalgebra_supported_on(const Subalgebra& s, const std::vector<Label>& labels) {
  std::vector<bool> inside(4, false);
  for (Label l : labels) inside[s.frame().ordering.index_of(l)] = true;
  int n = s.dim();
  std::vector<std::vector<Rational>> rows;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (inside[i] && inside[j]) continue;
      std::vector<Rational> row_re(n), row_im(n);
      for (int m = 0; m < n; ++m) {
        Scalar e = s.basis()[m].at(i, j);
        Gauss g = e.promote(Ring::Gauss).as_gauss();
        row_re[m] = g.re();
        row_im[m] = g.im();
      }
      rows.push_back(row_re);
      rows.push_back(row_im);
    }
  Mat sys(int(rows.size()), n);
  for (int r = 0; r < int(rows.size()); ++r)
    for (int m = 0; m < n; ++m) sys = sys.with_entry(r, m, Scalar(rows[r][m]));
  std::vector<Mat> basis;
  for (const Mat& c : kernel_basis(sys)) basis.push_back(s.element(c));
  return Subalgebra::from_basis(std::move(basis), s.frame());
}

KillingData killing(const Subalgebra& s) {
  int n = s.dim();
  // Structure constants; failure to close is a contract violation here.
  std::vector<Mat> ad(n, Mat(n, n));
  for (int i = 0; i < n; ++i) {
    Mat adi(n, n);
    for (int j = 0; j < n; ++j) {
      auto c = s.coordinates_of(commutator(s.basis()[i], s.basis()[j]));
      if (!c) throw Error(ErrorKind::NotClosed, "killing form needs a bracket-closed subalgebra");
      for (int k = 0; k < n; ++k) adi = adi.with_entry(k, j, c->at(k, 0));
    }
    ad[i] = adi;
  }
  KillingData out;
  Mat gram(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Mat prod = ad[i] * ad[j];
      Scalar tr = Scalar(0);
      for (int k = 0; k < n; ++k) tr += prod.at(k, k);
      gram = gram.with_entry(i, j, tr).with_entry(j, i, tr);
    }
  out.gram = demote(gram);
  std::tie(out.pos, out.neg, out.zero) = real_symmetric_signature(out.gram);
  out.semisimple = (out.zero == 0);
  return out;
}

std::tuple<int, int, int> real_symmetric_signature(const Mat& gram) {
  if (!gram.is_square()) throw Error(ErrorKind::ShapeMismatch, "signature of non-square matrix");
  int n = gram.rows();
  std::vector<std::vector<Scalar>> w(n, std::vector<Scalar>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (gram.at(i, j) != conj(gram.at(i, j)) || gram.at(i, j) != gram.at(j, i))
        throw Error(ErrorKind::ShapeMismatch, "signature needs a real symmetric matrix");
      w[i][j] = gram.at(i, j);
    }
  auto sign_of = [](const Scalar& v) {
    switch (v.ring()) {
      case Ring::Rational: return v.as_rational().sign();
      case Ring::Gauss: return v.as_gauss().re().sign();
      case Ring::Tower: return v.as_tower().sign_real();
      default: throw Error(ErrorKind::UnsupportedRing, "sign of polynomial");
    }
  };
  auto basis_swap = [&](int a, int b) {
    for (int r = 0; r < n; ++r) std::swap(w[r][a], w[r][b]);
    for (int c = 0; c < n; ++c) std::swap(w[a][c], w[b][c]);
  };
  auto basis_add = [&](int a, int b, const Scalar& f) {  // e_a += f e_b
    for (int r = 0; r < n; ++r) w[r][a] += f * w[r][b];
    for (int c = 0; c < n; ++c) w[a][c] += f * w[b][c];
  };
  int pos = 0, neg = 0, active = n, k = 0;
  while (k < active) {
    if (w[k][k].is_zero()) {
      int j_diag = -1, j_off = -1;
      for (int j = k + 1; j < active; ++j) {
        if (j_diag < 0 && !w[j][j].is_zero()) j_diag = j;
        if (j_off < 0 && !w[k][j].is_zero()) j_off = j;
      }
      if (j_diag >= 0) {
        basis_swap(k, j_diag);
      } else if (j_off >= 0) {
        basis_add(k, j_off, Scalar(1));
      } else {
        // e_k is radical within the active block
        basis_swap(k, active - 1);
        --active;
        continue;
      }
    }
    (sign_of(w[k][k]) > 0 ? pos : neg)++;
    for (int a = k + 1; a < active; ++a) {
      if (w[a][k].is_zero()) continue;
      basis_add(a, k, -(w[a][k] / w[k][k]));
    }
    ++k;
  }
  return {pos, neg, n - pos - neg};
}

std::map<int, std::vector<Mat>> character_decomposition(const Mat& t, const Subalgebra& ambient) {
  if (t.rows() != 4 || t.cols() != 4 || !t.is_diagonal())
    throw Error(ErrorKind::NotDiagonalGenerator, "t must be diagonal");
  Mat td = demote(t);
  std::vector<Rational> halves(4);
  for (int k = 0; k < 4; ++k) {
    Gauss d = td.at(k, k).promote(Ring::Gauss).as_gauss();
    if (!d.re().is_zero())
      throw Error(ErrorKind::NotDiagonalGenerator, "t must have purely imaginary diagonal");
    halves[k] = d.im() * Rational(1, 2);
  }

  int n = ambient.dim();
  Mat ad(n, n);
  for (int m = 0; m < n; ++m) {
    auto c = ambient.coordinates_of(commutator(t, ambient.basis()[m]));
    if (!c) throw Error(ErrorKind::NotClosed, "ambient is not stable under ad(t)");
    for (int k = 0; k < n; ++k) ad = ad.with_entry(k, m, c->at(k, 0));
  }

  // Candidate characters come from the differences of diagonal entries.
  std::vector<int> ks;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      Rational k = halves[a] - halves[b];
      if (k.den() == 1) {
        int ki = int(k.num());
        bool seen = false;
        for (int s : ks) seen = seen || (s == ki);
        if (!seen) ks.push_back(ki);
      }
    }
  std::sort(ks.begin(), ks.end());

  std::map<int, std::vector<Mat>> pieces;
  int total = 0;
  Ring kr = ring_join(ad.ring(), Ring::Gauss);
  Mat ad_c = ad.promote(kr);
  for (int k : ks) {
    Gauss eig(Rational(0), Rational(2 * int64_t(k)));
    Mat shifted = ad_c - Scalar(eig) * Mat::identity(n, kr);
    std::vector<Mat> vecs = kernel_basis(shifted);
    if (vecs.empty()) continue;
    std::vector<Mat> mats;
    for (const Mat& v : vecs) {
      Mat acc(4, 4);
      for (int m = 0; m < n; ++m) acc = acc + v.at(m, 0) * ambient.basis()[m];
      mats.push_back(acc);
    }
    total += int(mats.size());
    pieces[k] = std::move(mats);
  }
  if (total != n)
    throw Error(ErrorKind::NotDiagonalGenerator, "ad(t) is not split by the integer characters");
  return pieces;
}

std::vector<Mat> torus_complex_structures(const Subalgebra& t) {
  const HodgeFrame& frame = t.frame();
  for (int i = 0; i < t.dim(); ++i) {
    if (!demote(t.basis()[i]).is_diagonal())
      throw Error(ErrorKind::NotDiagonalTorus, "basis element not diagonal");
    for (int j = i + 1; j < t.dim(); ++j)
      if (!commutator(t.basis()[i], t.basis()[j]).is_zero())
        throw Error(ErrorKind::NotDiagonalTorus, "torus must be abelian");
  }
  int i30 = frame.ordering.index_of(Label::v30);
  int i21 = frame.ordering.index_of(Label::v21);

  // Basis elements are diag(i a, i b, -i b, -i a) in label positions;
  // collect the rational pairs (a, b).
  std::vector<std::pair<Rational, Rational>> gens;
  for (const Mat& m : t.basis()) {
    Mat d = demote(m);
    Gauss g30 = d.at(i30, i30).promote(Ring::Gauss).as_gauss();
    Gauss g21 = d.at(i21, i21).promote(Ring::Gauss).as_gauss();
    if (!g30.re().is_zero() || !g21.re().is_zero())
      throw Error(ErrorKind::NotDiagonalTorus, "torus generator not purely imaginary");
    gens.push_back({g30.im(), g21.im()});
  }

  // Integer character lattice annihilating the span of the (a, b) pairs.
  std::vector<std::pair<int64_t, int64_t>> constraints;
  Mat span(int(gens.size()), 2);
  for (int m = 0; m < int(gens.size()); ++m)
    span = span.with_entry(m, 0, Scalar(gens[m].first)).with_entry(m, 1, Scalar(gens[m].second));
  int r = gens.empty() ? 0 : rank(span);
  if (r == 0) return {};
  if (r == 1) {
    Rational a, b;
    for (const auto& [ga, gb] : gens)
      if (!ga.is_zero() || !gb.is_zero()) {
        a = ga;
        b = gb;
        break;
      }
    // primitive integer vector proportional to (b, -a)
    int64_t p = checked_mul(b.num(), a.den());
    int64_t q = checked_neg(checked_mul(a.num(), b.den()));
    int64_t g = std::gcd(std::abs(p), std::abs(q));
    constraints.push_back({p / g, q / g});
  }

  std::vector<Mat> found;
  for (auto [sx, sz] : {std::pair{1, 1}, std::pair{1, -1}, std::pair{-1, 1}, std::pair{-1, -1}}) {
    Gauss xi(Rational(0), Rational(sx));
    Gauss zeta(Rational(0), Rational(sz));
    bool ok = true;
    for (auto [p, q] : constraints) ok = ok && (xi.pow(p) * zeta.pow(q)).is_one();
    if (!ok) continue;
    std::vector<Scalar> diag(4);
    diag[i30] = Scalar(xi);
    diag[i21] = Scalar(zeta);
    diag[frame.ordering.index_of(Label::v12)] = Scalar(zeta.conj());
    diag[frame.ordering.index_of(Label::v03)] = Scalar(xi.conj());
    Mat j = Mat::diagonal(diag);
    if (complex_structure_check(j, frame)) found.push_back(j);
  }
  return found;
}

bool verify_ideal_split(const Subalgebra& s, const Subalgebra& part1, const Subalgebra& part2) {
  if (part1.dim() + part2.dim() != s.dim()) return false;
  for (const auto& b : part1.basis())
    if (!s.contains(b)) return false;
  for (const auto& b : part2.basis())
    if (!s.contains(b)) return false;
  for (const auto& b1 : part1.basis())
    for (const auto& b2 : part2.basis())
      if (!commutator(b1, b2).is_zero()) return false;
  for (const auto& b : s.basis()) {
    for (const auto& p : part1.basis())
      if (!part1.contains(commutator(b, p))) return false;
    for (const auto& p : part2.basis())
      if (!part2.contains(commutator(b, p))) return false;
  }
  // trivial intersection
  std::vector<Mat> all;
  for (const auto& b : part1.basis()) all.push_back(chart_vec(b, s.frame()));
  for (const auto& b : part2.basis()) all.push_back(chart_vec(b, s.frame()));
  Ring ring = Ring::Rational;
  for (const auto& c : all) ring = ring_join(ring, c.ring());
  return rank(stack_columns(all, 16, ring)) == part1.dim() + part2.dim();
}

}  // namespace cylie
