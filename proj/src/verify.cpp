#include "codforge/verify.hpp"

#include <algorithm>

#include "codforge/errors.hpp"

namespace codforge {

namespace {

std::string symbol_text(Symbol s) {
  return "z" + std::to_string(s.var()) + (s.conj() ? "*" : "");
}

// occ[v][c] = row holding variable v in column c, or -1. Sets *repeated if a
// variable occurs twice in one column.
std::vector<std::vector<int>> column_occurrences(const CODMatrix& m, bool* repeated) {
  std::vector<std::vector<int>> occ(static_cast<std::size_t>(m.vars()) + 1,
                                    std::vector<int>(static_cast<std::size_t>(m.cols()), -1));
  *repeated = false;
  for (int r = 0; r < m.rows(); ++r) {
    const auto row = m.row(r);
    for (int c = 0; c < m.cols(); ++c) {
      const Entry& e = row[static_cast<std::size_t>(c)];
      if (e.is_zero()) continue;
      int& slot = occ[static_cast<std::size_t>(e.var)][static_cast<std::size_t>(c)];
      if (slot != -1) *repeated = true;
      slot = r;
    }
  }
  return occ;
}

}  // namespace

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono < b.mono; });
  Polynomial out;
  for (const Term& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
      out.terms_.back().coeff += t.coeff;
      if (out.terms_.back().coeff == 0) out.terms_.pop_back();
    } else if (t.coeff != 0) {
      out.terms_.push_back(t);
    }
  }
  return out;
}

Polynomial Polynomial::norm_sum(int k) {
  std::vector<Term> terms;
  terms.reserve(static_cast<std::size_t>(k));
  for (int v = 1; v <= k; ++v)
    terms.push_back({Monomial::of(Symbol::of(v, false), Symbol::of(v, true)), 1});
  return from_terms(std::move(terms));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  std::vector<Term> terms = terms_;
  for (const Term& t : other.terms_) terms.push_back({t.mono, -t.coeff});
  return from_terms(std::move(terms));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const Term& t : terms_) {
    std::int64_t c = t.coeff;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    c = c < 0 ? -c : c;
    if (c != 1) out += std::to_string(c) + " ";
    out += symbol_text(t.mono.lo) + " " + symbol_text(t.mono.hi);
  }
  return out;
}

Polynomial gram_cell(const CODMatrix& m, int a, int b) {
  if (a < 0 || a >= m.cols() || b < 0 || b >= m.cols()) throw ArgumentError("column out of range");
  std::vector<Polynomial::Term> terms;
  for (int r = 0; r < m.rows(); ++r) {
    const auto row = m.row(r);
    const Entry& x = row[static_cast<std::size_t>(a)];
    const Entry& y = row[static_cast<std::size_t>(b)];
    if (x.is_zero() || y.is_zero()) continue;
    terms.push_back({Monomial::of(Symbol::of(x.var, !x.conj), Symbol::of(y.var, y.conj)),
                     static_cast<std::int64_t>(x.sign) * y.sign});
  }
  return Polynomial::from_terms(std::move(terms));
}

GramMatrix symbolic_gram(const CODMatrix& m) {
  const int n = m.cols();
  std::vector<Polynomial> cells;
  cells.reserve(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) cells.push_back(gram_cell(m, a, b));
  return GramMatrix(n, std::move(cells));
}

CodVerdict is_cod(const CODMatrix& m) {
  const Polynomial diagonal = Polynomial::norm_sum(m.vars());
  // The Gram matrix is Hermitian, so the first failure in row-major order is
  // always on or above the diagonal.
  for (int a = 0; a < m.cols(); ++a) {
    for (int b = a; b < m.cols(); ++b) {
      Polynomial cell = gram_cell(m, a, b);
      const bool good = a == b ? cell == diagonal : cell.empty();
      if (!good) {
        CodVerdict v;
        v.ok = false;
        v.row = a;
        v.col = b;
        v.residual = a == b ? cell - diagonal : std::move(cell);
        return v;
      }
    }
  }
  return {};
}

bool is_alamouti(const CODMatrix& m, int r1, int r2, int c1, int c2) {
  if (r1 == r2 || c1 == c2) throw ArgumentError("Alamouti test needs distinct rows and columns");
  const Entry& a = m.at(r1, c1);
  const Entry& b = m.at(r1, c2);
  const Entry& c = m.at(r2, c1);
  const Entry& d = m.at(r2, c2);
  if (a.is_zero() || b.is_zero() || c.is_zero() || d.is_zero()) return false;
  if (a.var != d.var || b.var != c.var || a.var == b.var) return false;
  if (a.conj == d.conj || b.conj == c.conj) return false;
  // conj(a) b + conj(c) d reduces to one monomial; it must cancel.
  return a.sign * b.sign + c.sign * d.sign == 0;
}

bool alamouti_covered(const CODMatrix& m) {
  bool repeated = false;
  const auto occ = column_occurrences(m, &repeated);
  if (repeated) throw PreconditionError("a variable repeats within a column");
  for (int v = 1; v <= m.vars(); ++v)
    for (int c = 0; c < m.cols(); ++c)
      if (occ[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)] < 0)
        throw PreconditionError("variable z" + std::to_string(v) + " misses a column");

  for (int r = 0; r < m.rows(); ++r) {
    const auto row = m.row(r);
    for (int c1 = 0; c1 < m.cols(); ++c1) {
      const Entry& x = row[static_cast<std::size_t>(c1)];
      if (x.is_zero()) continue;
      for (int c2 = c1 + 1; c2 < m.cols(); ++c2) {
        const Entry& y = row[static_cast<std::size_t>(c2)];
        if (y.is_zero()) continue;
        const int partner = occ[static_cast<std::size_t>(y.var)][static_cast<std::size_t>(c1)];
        if (partner == r || !is_alamouti(m, r, partner, c1, c2)) return false;
      }
    }
  }
  return true;
}

FirstTypeVerdict is_first_type(const CODMatrix& m) {
  if (!is_cod(m)) throw PreconditionError("first-type test is only defined on CODs");
  struct Occ {
    int r, c;
    bool conj;
  };
  std::vector<std::vector<Occ>> occ(static_cast<std::size_t>(m.vars()) + 1);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (const Entry& e = m.at(r, c); !e.is_zero())
        occ[static_cast<std::size_t>(e.var)].push_back({r, c, e.conj});

  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      const Entry& e = m.at(r, c);
      if (e.is_zero()) continue;
      for (const Occ& o : occ[static_cast<std::size_t>(e.var)]) {
        if (o.r <= r || o.c == c || o.conj == e.conj) continue;
        if (m.at(r, o.c).is_zero() && m.at(o.r, c).is_zero()) {
          FirstTypeVerdict v;
          v.ok = false;
          v.r1 = r;
          v.r2 = o.r;
          v.c1 = c;
          v.c2 = o.c;
          v.var = e.var;
          return v;
        }
      }
    }
  }
  return {};
}

bool is_conjugation_separated(const CODMatrix& m) {
  for (int r = 0; r < m.rows(); ++r) {
    int seen = -1;
    for (const Entry& e : m.row(r)) {
      if (e.is_zero()) continue;
      const int flag = e.conj ? 1 : 0;
      if (seen != -1 && seen != flag) return false;
      seen = flag;
    }
  }
  return true;
}

bool BjForm::mj_has_zero() const {
  return std::any_of(mj.begin(), mj.end(), [](const Entry& e) { return e.is_zero(); });
}

BjForm extract_bj(const CODMatrix& m, int var) {
  if (var < 1 || var > m.vars()) throw ArgumentError("variable z" + std::to_string(var) + " not in design");
  const int n = m.cols();
  std::vector<int> row_of(static_cast<std::size_t>(n), -1);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < n; ++c) {
      if (m.at(r, c).var != var) continue;
      if (row_of[static_cast<std::size_t>(c)] != -1)
        throw StructuralError("z" + std::to_string(var) + " occurs twice in column " + std::to_string(c + 1));
      row_of[static_cast<std::size_t>(c)] = r;
    }
  }
  BjForm form;
  form.var = var;
  std::vector<int> plain_cols, conj_cols;
  for (int c = 0; c < n; ++c) {
    const int r = row_of[static_cast<std::size_t>(c)];
    if (r < 0) throw StructuralError("z" + std::to_string(var) + " misses column " + std::to_string(c + 1));
    (m.at(r, c).conj ? conj_cols : plain_cols).push_back(c);
  }
  form.n1 = static_cast<int>(plain_cols.size());
  form.n2 = static_cast<int>(conj_cols.size());
  form.col_order = plain_cols;
  form.col_order.insert(form.col_order.end(), conj_cols.begin(), conj_cols.end());
  for (int c : form.col_order) {
    const int r = row_of[static_cast<std::size_t>(c)];
    if (std::find(form.row_order.begin(), form.row_order.end(), r) != form.row_order.end())
      throw StructuralError("z" + std::to_string(var) + " occurs twice in row " + std::to_string(r + 1));
    form.row_order.push_back(r);
    form.row_signs.push_back(m.at(r, c).sign);
  }

  auto cell = [&](int i, int j) {
    const int s = form.row_signs[static_cast<std::size_t>(i)];
    const Entry e = m.at(form.row_order[static_cast<std::size_t>(i)], form.col_order[static_cast<std::size_t>(j)]);
    return s < 0 ? e.negated() : e;
  };
  auto block_error = [&](const std::string& what) {
    return StructuralError("B_" + std::to_string(var) + " form violated: " + what);
  };

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const bool same_block = (i < form.n1) == (j < form.n1);
      if (same_block && i != j && !cell(i, j).is_zero()) throw block_error("nonzero off-diagonal in identity block");
    }

  form.mj.reserve(static_cast<std::size_t>(form.n1) * form.n2);
  for (int a = 0; a < form.n1; ++a) {
    for (int b = 0; b < form.n2; ++b) {
      const Entry upper = cell(a, form.n1 + b);
      const Entry lower = cell(form.n1 + b, a);
      if (!(lower == upper.conjugated().negated())) throw block_error("lower-left block is not -M^H");
      form.mj.push_back(upper);
    }
  }
  return form;
}

}  // namespace codforge
