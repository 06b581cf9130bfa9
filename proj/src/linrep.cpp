#include "nara/linrep.hpp"

#include <sstream>

namespace nara {

namespace {

using Vec = std::vector<Rational>;

Vec times(const Vec& x, const RMatrix& m) {
  Vec y(m.empty() ? 0 : m[0].size(), Rational(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (sgn(m[i][j]) != 0) y[j] += x[i] * m[i][j];
  }
  return y;
}

Rational dot(const Vec& a, const Vec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Row space in reduced echelon form; coordinates of a member x are x[pivot].
class Echelon {
 public:
  // Adds x if it is outside the span; returns whether it was added.
  bool add(Vec x) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Rational c = x[pivots_[k]];
      if (sgn(c) == 0) continue;
      for (std::size_t j = 0; j < x.size(); ++j)
        if (sgn(rows_[k][j]) != 0) x[j] -= c * rows_[k][j];
    }
    std::size_t p = 0;
    while (p < x.size() && sgn(x[p]) == 0) ++p;
    if (p == x.size()) return false;
    const Rational lead = x[p];
    for (auto& e : x) e /= lead;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Rational c = rows_[k][p];
      if (sgn(c) == 0) continue;
      for (std::size_t j = 0; j < x.size(); ++j)
        if (sgn(x[j]) != 0) rows_[k][j] -= c * x[j];
    }
    rows_.push_back(std::move(x));
    pivots_.push_back(p);
    return true;
  }
  Vec coords(const Vec& x) const {
    Vec c;
    for (std::size_t p : pivots_) c.push_back(x[p]);
    return c;
  }
  const std::vector<Vec>& rows() const { return rows_; }

 private:
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

// Restricts to the span of { u M_w }.
LinearRep reduce_left(const LinearRep& r) {
  Echelon e;
  std::vector<Vec> queue;
  if (e.add(r.u)) queue.push_back(r.u);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (const RMatrix& m : r.m) {
      Vec x = times(queue[q], m);
      if (e.add(x)) queue.push_back(std::move(x));
    }
  }
  LinearRep out;
  const auto& rows = e.rows();
  out.u = e.coords(r.u);
  for (std::size_t d = 0; d < 2; ++d)
    for (const Vec& row : rows) out.m[d].push_back(e.coords(times(row, r.m[d])));
  for (const Vec& row : rows) out.v.push_back(dot(row, r.v));
  return out;
}

RMatrix transpose(const RMatrix& m, std::size_t n) {
  RMatrix t(n, Vec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) t[j][i] = m[i][j];
  return t;
}

LinearRep transpose(const LinearRep& r) {
  LinearRep t;
  t.u = r.v;
  t.v = r.u;
  for (std::size_t d = 0; d < 2; ++d) t.m[d] = transpose(r.m[d], r.rank());
  return t;
}

Vec stabilize(const LinearRep& r, std::size_t cap) {
  Vec x = r.u;
  for (std::size_t s = 0; s <= cap; ++s) {
    Vec y = times(x, r.m[0]);
    if (y == x) return x;
    x = std::move(y);
  }
  throw InfiniteCountError("linear representation does not stabilize under leading zeros");
}

}  // namespace

LinearRep count_track(const Automaton& a, const std::string& counted, std::size_t cap) {
  if (a.track_count() != 2) throw std::invalid_argument("count_track: need a two-track automaton");
  const int c = a.track_index(counted);
  if (c < 0) throw std::invalid_argument("count_track: no track '" + counted + "'");
  const int index = 1 - c;
  const std::size_t d = a.state_count();
  LinearRep r;
  r.u.assign(d, Rational(0));
  r.u[a.initial()] = 1;
  r.v.assign(d, Rational(0));
  for (auto& m : r.m) m.assign(d, Vec(d, Rational(0)));
  for (StateId s = 0; s < d; ++s) {
    if (a.accepting(s)) r.v[s] = 1;
    for (const Edge& e : a.edges(s)) r.m[(e.symbol >> index) & 1][s][e.target] += 1;
  }
  r.u = stabilize(r, cap);
  return r;
}

LinearRep zero_rep() { return {}; }

LinearRep minimize(const LinearRep& r) {
  if (r.rank() == 0) return r;
  LinearRep left = reduce_left(r);
  if (left.rank() == 0) return zero_rep();
  LinearRep right = reduce_left(transpose(left));
  if (right.rank() == 0) return zero_rep();
  return transpose(right);
}

LinearRep difference(const LinearRep& a, const LinearRep& b) {
  const std::size_t n = a.rank(), k = b.rank();
  LinearRep r;
  r.u = a.u;
  r.u.insert(r.u.end(), b.u.begin(), b.u.end());
  r.v = a.v;
  for (const Rational& x : b.v) r.v.push_back(-x);
  for (std::size_t d = 0; d < 2; ++d) {
    r.m[d].assign(n + k, Vec(n + k, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) r.m[d][i][j] = a.m[d][i][j];
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) r.m[d][n + i][n + j] = b.m[d][i][j];
  }
  return r;
}

bool equal(const LinearRep& a, const LinearRep& b) { return minimize(difference(a, b)).rank() == 0; }

Rational evaluate_word(const LinearRep& r, const std::string& digits) {
  if (r.rank() == 0) return 0;
  Vec x = r.u;
  for (char ch : digits) {
    if (ch != '0' && ch != '1') throw std::invalid_argument("evaluate_word: digits must be 0 or 1");
    x = times(x, r.m[ch - '0']);
  }
  return dot(x, r.v);
}

Rational evaluate(const LinearRep& r, const BigInt& n, std::size_t cap) {
  if (r.rank() == 0) return 0;
  LinearRep s = r;
  s.u = stabilize(r, cap);
  return evaluate_word(s, to_canonical(n).str());
}

std::string to_text(const LinearRep& r) {
  std::ostringstream out;
  auto row = [&](const Vec& v) {
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
    out << "\n";
  };
  out << "rank " << r.rank() << "\nu\n";
  row(r.u);
  for (std::size_t d = 0; d < 2; ++d) {
    out << "M" << d << "\n";
    for (const Vec& v : r.m[d]) row(v);
  }
  out << "v\n";
  row(r.v);
  return out.str();
}

}  // namespace nara
