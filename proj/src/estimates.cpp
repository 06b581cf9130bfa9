#include "nara/estimates.hpp"

#include <algorithm>
#include <stdexcept>

namespace nara {

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  lo_.canonicalize();
  hi_.canonicalize();
  if (hi_ < lo_) throw std::invalid_argument("interval with lo > hi");
}

Interval Interval::decimal(const std::string& s) {
  std::string digits;
  bool neg = false;
  int frac = -1;
  for (char c : s) {
    if (c == '-' && digits.empty() && !neg) {
      neg = true;
    } else if (c == '.' && frac < 0) {
      frac = 0;
    } else if (c >= '0' && c <= '9') {
      digits += c;
      if (frac >= 0) ++frac;
    } else {
      throw std::invalid_argument("bad decimal literal '" + s + "'");
    }
  }
  if (digits.empty()) throw std::invalid_argument("bad decimal literal '" + s + "'");
  mpz_class num(digits, 10), den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(std::max(frac, 0)));
  Rational q(neg ? mpz_class(-num) : num, den);
  return point(q);
}

Interval Interval::rounded(unsigned bits) const {
  mpz_class scale = 1;
  scale <<= bits;
  mpz_class lo_n = lo_.get_num() * scale, hi_n = hi_.get_num() * scale, l, h;
  mpz_fdiv_q(l.get_mpz_t(), lo_n.get_mpz_t(), lo_.get_den_mpz_t());
  mpz_cdiv_q(h.get_mpz_t(), hi_n.get_mpz_t(), hi_.get_den_mpz_t());
  return {Rational(l, scale), Rational(h, scale)};
}

Interval Interval::pow(unsigned e) const {
  Interval r = point(1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

Interval operator+(const Interval& a, const Interval& b) { return {a.lo_ + b.lo_, a.hi_ + b.hi_}; }
Interval operator-(const Interval& a, const Interval& b) { return {a.lo_ - b.hi_, a.hi_ - b.lo_}; }
Interval operator-(const Interval& a) { return {-a.hi_, -a.lo_}; }

Interval operator*(const Interval& a, const Interval& b) {
  const Rational p[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.lo_ <= 0 && b.hi_ >= 0) throw std::domain_error("interval division by an interval containing 0");
  return a * Interval(1 / b.hi_, 1 / b.lo_);
}

Interval hull(const Interval& a, const Interval& b) { return {std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_)}; }

std::string to_decimal(const Rational& x, int digits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class n = abs(x.get_num()) * scale, q;
  mpz_tdiv_q(q.get_mpz_t(), n.get_mpz_t(), x.get_den_mpz_t());
  std::string s = q.get_str();
  if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  return (sgn(x) < 0 ? "-" : "") + s;
}

bool matches_decimal(const Interval& x, const std::string& printed) {
  const Rational v = Interval::decimal(printed).lo();
  const auto dot = printed.find('.');
  const std::size_t places = dot == std::string::npos ? 0 : printed.size() - dot - 1;
  mpz_class unit;
  mpz_ui_pow_ui(unit.get_mpz_t(), 10, static_cast<unsigned long>(places));
  const Rational ulp(1, unit);
  return x.lo() - ulp <= v && v <= x.hi() + ulp;
}

namespace {

// Largest dyadic (denominator 2^bits) r with r^2 <= x, for x >= 0.
Rational sqrt_down(const Rational& x, unsigned bits) {
  mpz_class scale = 1;
  scale <<= 2 * bits;
  mpz_class n = x.get_num() * scale, q, r;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), x.get_den_mpz_t());
  mpz_sqrt(r.get_mpz_t(), q.get_mpz_t());
  mpz_class den = 1;
  den <<= bits;
  return {r, den};
}

}  // namespace

Interval interval_sqrt(const Interval& x, unsigned bits) {
  if (sgn(x.lo()) < 0) throw std::domain_error("sqrt of a negative interval");
  Rational lo = sqrt_down(x.lo(), bits);
  Rational hi = sqrt_down(x.hi(), bits);
  Rational step(1);
  step /= Rational(mpz_class(1) << bits);
  while (hi * hi < x.hi()) hi += step;
  return {lo, hi};
}

Interval root_alpha(unsigned bits) {
  Rational lo = 1, hi = 2;
  const Rational eps = Rational(1) / Rational(mpz_class(1) << bits);
  while (hi - lo >= eps) {
    const Rational mid = (lo + hi) / 2;
    if (mid * mid * mid - mid * mid - 1 < 0)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

Constants constants(unsigned bits) {
  const unsigned work = bits + 32;
  Constants c;
  c.alpha = root_alpha(work);
  const Interval& a = c.alpha;
  const Interval one = Interval::point(1), two = Interval::point(2);
  // beta * gamma = 1/alpha and beta + gamma = 1 - alpha.
  const Interval p = one / a, s = one - a;
  c.beta_abs = interval_sqrt(p.rounded(work), work);
  c.c1 = (a.pow(5) / (a.pow(3) + two)).rounded(work);
  // |beta^3 + 2|^2 = (beta gamma)^3 + 2 (beta^3 + gamma^3) + 4.
  const Interval cubes = s.pow(3) - Interval::point(3) * p * s;
  const Interval denom = p.pow(3) + two * cubes + Interval::point(4);
  c.c2_abs = interval_sqrt((p.pow(5) / denom).rounded(work), work);
  return c;
}

Interval critical_exponent(unsigned bits) {
  const Interval a = root_alpha(bits + 8);
  return ((a * a + a + Interval::point(5)) / Interval::point(3)).rounded(bits + 4);
}

ShiftBounds shift_bounds(int k, int window, unsigned bits) {
  if (k < 1 || k > 3) throw std::invalid_argument("shift_bounds: k must be 1, 2 or 3");
  if (window < 3) throw std::invalid_argument("shift_bounds: window must be at least 3");
  const Constants c = constants(bits);
  const Interval ak = c.alpha.pow(static_cast<unsigned>(k)).rounded(bits);
  ShiftBounds out;
  out.k = k;
  out.window = window;
  // Each canonical string of at most `window` digits, as its suffix sum
  // sum_j (N_{f_j + k} - alpha^k N_{f_j}) = [(m) 0^k] - alpha^k m.
  const std::uint64_t limit = narayana_u64(window);
  std::optional<Interval> lo, hi;
  Rational best_lo_value, best_hi_value;
  std::uint64_t at_lo = 0, at_hi = 0;
  for (std::uint64_t m = 0; m < limit; ++m) {
    const std::string d = to_canonical(m).str() + std::string(static_cast<std::size_t>(k), '0');
    const std::uint64_t shifted = value_u64(Representation(d));
    // Compare with the midpoint of alpha^k first; keep the extreme ones.
    const Rational mid = Rational(mpz_class(std::to_string(shifted))) -
                         (ak.lo() + ak.hi()) / 2 * Rational(mpz_class(std::to_string(m)));
    if (m == 0 || mid < best_lo_value) {
      best_lo_value = mid;
      at_lo = m;
    }
    if (m == 0 || mid > best_hi_value) {
      best_hi_value = mid;
      at_hi = m;
    }
  }
  auto enclose = [&](std::uint64_t m) {
    const std::string d = to_canonical(m).str() + std::string(static_cast<std::size_t>(k), '0');
    return Interval::point(Rational(mpz_class(std::to_string(value_u64(Representation(d)))))) -
           ak * Interval::point(Rational(mpz_class(std::to_string(m))));
  };
  // The midpoint ranking can only be wrong by the width of alpha^k times m,
  // so widen the extremes by that amount.
  const Rational slack = ak.width() * Rational(mpz_class(std::to_string(limit)));
  out.finite_min = enclose(at_lo) - Interval(0, slack);
  out.finite_max = enclose(at_hi) + Interval(0, slack);
  const Interval coeff = Interval::point(2) * c.c2_abs * (c.beta_abs.pow(static_cast<unsigned>(k)) + ak);
  const Interval q = c.beta_abs;
  const Interval tail = coeff * q.pow(static_cast<unsigned>(window)) / (Interval::point(1) - q);
  out.tail = tail.rounded(bits).hi();
  out.lower = out.finite_min.lo() - out.tail;
  out.upper = out.finite_max.hi() + out.tail;
  out.coefficient = coeff.rounded(bits).hi();
  out.ratio = q.hi();
  return out;
}

namespace {

Rational rat(std::uint64_t v) { return Rational(mpz_class(std::to_string(v))); }

void note(SweepReport& r, const Rational& lo, const Rational& hi) {
  if (r.checked == 0 || lo < r.min_seen) r.min_seen = lo;
  if (r.checked == 0 || hi > r.max_seen) r.max_seen = hi;
}

// Checks lower < f(i) - c*i < upper for i in [first, last], refining c as
// needed so that every comparison is decided.
SweepReport sweep(const std::function<std::uint64_t(std::uint64_t)>& f, const std::function<Interval(unsigned)>& c,
                  const Rational& lower, const Rational& upper, std::uint64_t first, std::uint64_t last,
                  std::string what) {
  SweepReport r;
  r.what = std::move(what);
  unsigned bits = 96;
  Interval cc = c(bits);
  for (std::uint64_t i = first; i <= last; ++i) {
    const Rational fi = rat(f(i)), ii = rat(i);
    while (true) {
      const Rational lo = fi - cc.hi() * ii, hi = fi - cc.lo() * ii;
      if (lo > lower && hi < upper) {
        note(r, lo, hi);
        break;
      }
      if (hi <= lower || lo >= upper) {
        r.ok = false;
        r.witness = i;
        r.checked = i - first + 1;
        return r;
      }
      bits *= 2;
      if (bits > 1u << 14) throw std::runtime_error("sweep: comparison undecided at high precision");
      cc = c(bits);
    }
    ++r.checked;
  }
  return r;
}

std::function<std::uint64_t(std::uint64_t)> lookup(const SynchronizedSequence& s) {
  return [&s](std::uint64_t i) {
    const auto v = s.at(i);
    if (!v) throw std::domain_error(s.name + ": no value at " + std::to_string(i));
    return *v;
  };
}

}  // namespace

KmReport verify_km(Workspace& ws, std::uint64_t range_max) {
  const SynchronizedSequence a = ws.sequence("a"), b = ws.sequence("b");
  KmReport out;
  out.a = sweep(lookup(a), [](unsigned bits) { return root_alpha(bits); },
                Interval::decimal("-1.2630921").lo(), Interval::decimal("0.58304372").lo(), 1, range_max,
                "a(i) - alpha i");
  out.b = sweep(lookup(b), [](unsigned bits) { return root_alpha(bits).pow(3).rounded(bits); },
                Interval::decimal("-2.2480941").lo(), Interval::decimal("0.558039").lo(), 1, range_max,
                "b(i) - alpha^3 i");
  return out;
}

SweepReport verify_cloitre(Workspace& ws, std::uint64_t range_max) {
  const SynchronizedSequence h = ws.sequence("h");
  SweepReport r;
  r.what = "H(i) - floor(i/alpha)";
  unsigned bits = 96;
  auto inverse = [](unsigned b) {
    const Interval a = root_alpha(b);
    return (a * a - a).rounded(b);  // 1/alpha = alpha^2 - alpha
  };
  Interval inv = inverse(bits);
  for (std::uint64_t i = 0; i <= range_max; ++i) {
    const auto hv = h.at(i);
    if (!hv) throw std::domain_error("h: no value at " + std::to_string(i));
    mpz_class flo, fhi;
    while (true) {
      const Rational lo = inv.lo() * rat(i), hi = inv.hi() * rat(i);
      mpz_fdiv_q(flo.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
      mpz_fdiv_q(fhi.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
      if (flo == fhi) break;
      bits *= 2;
      if (bits > 1u << 14) throw std::runtime_error("verify_cloitre: floor undecided");
      inv = inverse(bits);
    }
    const Rational diff = rat(*hv) - Rational(flo);
    note(r, diff, diff);
    ++r.checked;
    if (diff != 0 && diff != 1) {
      r.ok = false;
      r.witness = i;
      return r;
    }
  }
  return r;
}

SweepReport check_eq_n_bounds(int k, int i_max) {
  static const char* const coeff[] = {"0.71826736534411", "0.887090800406", "1.16331950440432"};
  if (k < 1 || k > 3) throw std::invalid_argument("check_eq_n_bounds: k must be 1, 2 or 3");
  const Rational ck = Interval::decimal(coeff[k - 1]).lo();
  const Rational q = Interval::decimal("0.8260313576542").lo();
  SweepReport r;
  r.what = "|N_{i+k} - alpha^k N_i| < C_k q^i";
  unsigned bits = 128;
  for (int i = 0; i <= i_max; ++i) {
    const Rational bound = ck * [&] {
      Rational p = 1;
      for (int j = 0; j < i; ++j) p *= q;
      return p;
    }();
    while (true) {
      const Interval ak = root_alpha(bits).pow(static_cast<unsigned>(k));
      const Interval d = Interval::point(Rational(narayana(i + k))) - ak * Interval::point(Rational(narayana(i)));
      const Rational mag_hi = std::max(abs(d.lo()), abs(d.hi()));
      const Rational mag_lo = (sgn(d.lo()) <= 0 && sgn(d.hi()) >= 0) ? Rational(0) : std::min(abs(d.lo()), abs(d.hi()));
      if (mag_hi < bound) {
        note(r, mag_lo, mag_hi);
        break;
      }
      if (mag_lo >= bound) {
        r.ok = false;
        r.witness = static_cast<std::uint64_t>(i);
        return r;
      }
      bits *= 2;
      if (bits > 1u << 15) throw std::runtime_error("check_eq_n_bounds: undecided");
    }
    ++r.checked;
  }
  return r;
}

}  // namespace nara
