#include "galois/roots.hpp"

#include <algorithm>
#include <climits>
#include <optional>

namespace galois {

namespace {

// Plain (uncertified) complex number at working precision, used only to
// drive the simultaneous iteration.  Correctness comes from the inclusion
// radii computed afterwards in ball arithmetic.
struct Cx {
  Real re, im;
  explicit Cx(mpfr_prec_t p) : re(p), im(p) {}
};

void cx_mul(Cx& r, const Cx& a, const Cx& b) {
  Cx t(r.re.prec());
  mpfr_fmms(t.re.get(), a.re.get(), b.re.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_fmma(t.im.get(), a.re.get(), b.im.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  r = std::move(t);
}

// r = a / b; false if b == 0.
bool cx_div(Cx& r, const Cx& a, const Cx& b) {
  const mpfr_prec_t p = r.re.prec();
  Real den(p);
  mpfr_fmma(den.get(), b.re.get(), b.re.get(), b.im.get(), b.im.get(), MPFR_RNDN);
  if (mpfr_zero_p(den.get())) return false;
  Cx t(p);
  mpfr_fmma(t.re.get(), a.re.get(), b.re.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_fmms(t.im.get(), a.im.get(), b.re.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_div(t.re.get(), t.re.get(), den.get(), MPFR_RNDN);
  mpfr_div(t.im.get(), t.im.get(), den.get(), MPFR_RNDN);
  r = std::move(t);
  return true;
}

void cx_sub(Cx& r, const Cx& a, const Cx& b) {
  mpfr_sub(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_sub(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
}

// f(z) and f'(z) by Horner.
void eval_with_derivative(const std::vector<Real>& coeffs, const Cx& z, Cx& f, Cx& df) {
  const mpfr_prec_t p = z.re.prec();
  f = Cx(p);
  df = Cx(p);
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    cx_mul(df, df, z);
    mpfr_add(df.re.get(), df.re.get(), f.re.get(), MPFR_RNDN);
    mpfr_add(df.im.get(), df.im.get(), f.im.get(), MPFR_RNDN);
    cx_mul(f, f, z);
    mpfr_add(f.re.get(), f.re.get(), coeffs[i].get(), MPFR_RNDN);
  }
}

// Cauchy bound circle with a fixed angular offset.
std::vector<Cx> initial_guesses(const IntPolynomial& f, mpfr_prec_t p) {
  const std::size_t n = f.degree();
  Real bound(p), t(p);
  const auto& c = f.coefficients();
  for (std::size_t i = 0; i < n; ++i) {
    mpfr_set_z(t.get(), c[i].get_mpz_t(), MPFR_RNDN);
    mpfr_div_z(t.get(), t.get(), c[n].get_mpz_t(), MPFR_RNDN);
    mpfr_abs(t.get(), t.get(), MPFR_RNDN);
    if (mpfr_cmp(t.get(), bound.get()) > 0) mpfr_set(bound.get(), t.get(), MPFR_RNDN);
  }
  mpfr_add_ui(bound.get(), bound.get(), 1, MPFR_RNDN);
  std::vector<Cx> z;
  Real angle(p), s(p), co(p);
  for (std::size_t k = 0; k < n; ++k) {
    mpfr_const_pi(angle.get(), MPFR_RNDN);
    mpfr_mul_ui(angle.get(), angle.get(), 2 * k, MPFR_RNDN);
    mpfr_div_ui(angle.get(), angle.get(), n, MPFR_RNDN);
    mpfr_add_d(angle.get(), angle.get(), 0.7, MPFR_RNDN);
    mpfr_sin_cos(s.get(), co.get(), angle.get(), MPFR_RNDN);
    Cx w(p);
    mpfr_mul(w.re.get(), co.get(), bound.get(), MPFR_RNDN);
    mpfr_mul(w.im.get(), s.get(), bound.get(), MPFR_RNDN);
    z.push_back(std::move(w));
  }
  return z;
}

long relative_exponent(const Cx& corr, const Cx& z) {
  if (mpfr_zero_p(corr.re.get()) && mpfr_zero_p(corr.im.get())) return LONG_MIN;
  Real mag(kRadiusBits), scale(kRadiusBits);
  mpfr_hypot(mag.get(), corr.re.get(), corr.im.get(), MPFR_RNDU);
  mpfr_hypot(scale.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  long e = mpfr_get_exp(mag.get());
  if (mpfr_cmp_ui(scale.get(), 1) > 0) e -= mpfr_get_exp(scale.get());
  return e;
}

// Aberth-Ehrlich iteration in place.  Stops when every correction is below
// 2^-(p-6) relative to max(1, |z|) or after max_iter sweeps.
void aberth(const IntPolynomial& f, std::vector<Cx>& z, mpfr_prec_t p, int max_iter) {
  const std::size_t n = z.size();
  std::vector<Real> coeffs;
  for (const auto& c : f.coefficients()) {
    Real r(p);
    mpfr_set_z(r.get(), c.get_mpz_t(), MPFR_RNDN);
    coeffs.push_back(std::move(r));
  }
  Cx fz(p), dfz(p), ratio(p), sum(p), diff(p), inv(p), corr(p), one(p), den(p);
  mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);
  const long target = -(static_cast<long>(p) - 6);
  long previous = 0;
  for (int iter = 0; iter < max_iter; ++iter) {
    // Largest correction this sweep, as a binary exponent relative to max(1, |z|).
    long worst = LONG_MIN;
    for (std::size_t k = 0; k < n; ++k) {
      eval_with_derivative(coeffs, z[k], fz, dfz);
      if (mpfr_zero_p(fz.re.get()) && mpfr_zero_p(fz.im.get())) continue;
      if (!cx_div(ratio, fz, dfz)) {
        worst = 0;
        mpfr_nextabove(z[k].re.get());
        continue;
      }
      sum = Cx(p);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k) continue;
        cx_sub(diff, z[k], z[j]);
        if (!cx_div(inv, one, diff)) continue;
        mpfr_add(sum.re.get(), sum.re.get(), inv.re.get(), MPFR_RNDN);
        mpfr_add(sum.im.get(), sum.im.get(), inv.im.get(), MPFR_RNDN);
      }
      cx_mul(den, ratio, sum);
      cx_sub(den, one, den);
      if (!cx_div(corr, ratio, den)) corr = ratio;
      cx_sub(z[k], z[k], corr);
      worst = std::max(worst, relative_exponent(corr, z[k]));
    }
    if (worst <= target) return;
    // Rounding noise floor: stop once corrections are small and no longer shrinking.
    if (iter > 0 && worst < -static_cast<long>(p) / 2 && worst >= previous - 1) return;
    previous = worst;
  }
}

ComplexBall point_ball(const Cx& z) {
  ComplexBall b(z.re.prec());
  mpfr_set(b.re().get(), z.re.get(), MPFR_RNDN);
  mpfr_set(b.im().get(), z.im.get(), MPFR_RNDN);
  return b;
}

// Weierstrass inclusion: with W_i = f(z_i) / (lc * prod_{j != i} (z_i - z_j)),
// the disks D(z_i, n |W_i|) cover all roots and any union of k of them that
// is disjoint from the others holds exactly k roots.
std::optional<std::vector<ComplexBall>> inclusion_balls(const IntPolynomial& f, const std::vector<Cx>& z) {
  const std::size_t n = z.size();
  std::vector<ComplexBall> pts;
  pts.reserve(n);
  for (const auto& w : z) pts.push_back(point_ball(w));
  std::vector<ComplexBall> out;
  out.reserve(n);
  Real lc(kRadiusBits);
  mpfr_set_z(lc.get(), f.leading().get_mpz_t(), MPFR_RNDD);
  mpfr_abs(lc.get(), lc.get(), MPFR_RNDD);
  for (std::size_t i = 0; i < n; ++i) {
    Real num = evaluate(f, pts[i]).mag_upper();
    Real den = lc;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      Real d = (pts[i] - pts[j]).mag_lower();
      mpfr_mul(den.get(), den.get(), d.get(), MPFR_RNDD);
    }
    if (mpfr_zero_p(den.get())) return std::nullopt;
    ComplexBall b = pts[i];
    mpfr_div(b.rad().get(), num.get(), den.get(), MPFR_RNDU);
    mpfr_mul_ui(b.rad().get(), b.rad().get(), n, MPFR_RNDU);
    out.push_back(std::move(b));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!certainly_disjoint(out[i], out[j])) return std::nullopt;
  return out;
}

// Real coefficients: the conjugate of a root is a root.  A ball whose mirror
// image meets only itself holds a real root; two balls that mirror onto each
// other hold conjugate roots and can share the tighter of the two radii.
void impose_conjugate_symmetry(std::vector<ComplexBall>& balls) {
  const std::size_t n = balls.size();
  for (std::size_t i = 0; i < n; ++i) {
    const ComplexBall mirror = balls[i].conj();
    std::vector<std::size_t> hits;
    for (std::size_t j = 0; j < n; ++j)
      if (!certainly_disjoint(mirror, balls[j])) hits.push_back(j);
    if (hits.size() != 1) continue;
    const std::size_t j = hits[0];
    if (j == i) {
      mpfr_set_zero(balls[i].im().get(), 1);
    } else if (j > i) {
      if (mpfr_cmp(balls[i].rad().get(), balls[j].rad().get()) <= 0)
        balls[j] = mirror;
      else
        balls[i] = balls[j].conj();
    }
  }
}

bool ordered_before(const ComplexBall& a, const ComplexBall& b) {
  Real hi_a(a.prec() + 64), lo_b(b.prec() + 64);
  mpfr_add(hi_a.get(), a.re().get(), a.rad().get(), MPFR_RNDU);
  mpfr_sub(lo_b.get(), b.re().get(), b.rad().get(), MPFR_RNDD);
  if (mpfr_cmp(hi_a.get(), lo_b.get()) < 0) return true;
  Real hi_b(b.prec() + 64), lo_a(a.prec() + 64);
  mpfr_add(hi_b.get(), b.re().get(), b.rad().get(), MPFR_RNDU);
  mpfr_sub(lo_a.get(), a.re().get(), a.rad().get(), MPFR_RNDD);
  if (mpfr_cmp(hi_b.get(), lo_a.get()) < 0) return false;
  // Real parts not separated: order by imaginary part.
  const int c = mpfr_cmp(a.im().get(), b.im().get());
  if (c != 0) return c < 0;
  return mpfr_cmp(a.re().get(), b.re().get()) < 0;
}

// Run the iteration at doubling precision until the inclusion disks separate.
RootSet certify_from(const IntPolynomial& f, std::vector<Cx> z, mpfr_prec_t start, mpfr_prec_t max_bits) {
  for (mpfr_prec_t p = start; p <= max_bits; p *= 2) {
    for (auto& w : z) {
      mpfr_prec_round(w.re.get(), p, MPFR_RNDN);
      mpfr_prec_round(w.im.get(), p, MPFR_RNDN);
    }
    for (int attempt = 0; attempt < 3; ++attempt) {
      aberth(f, z, p, attempt == 0 ? 400 : 50);
      if (auto balls = inclusion_balls(f, z)) {
        impose_conjugate_symmetry(*balls);
        return RootSet{f, std::move(*balls), p};
      }
    }
    if (p > max_bits / 2) break;
  }
  throw Error(ErrorCode::PrecisionExhausted,
              "could not separate the roots of " + to_string(f) + " within " + std::to_string(max_bits) + " bits");
}

}  // namespace

RootSet isolate_roots(const IntPolynomial& f, mpfr_prec_t precision_bits, mpfr_prec_t max_bits) {
  if (f.degree() < 1) throw Error(ErrorCode::InvalidInput, "root isolation needs degree >= 1");
  if (!is_squarefree(f)) throw Error(ErrorCode::NotSquarefree, to_string(f) + " has a repeated root");
  RootSet rs = certify_from(f, initial_guesses(f, precision_bits), precision_bits, max_bits);
  auto& b = rs.balls;
  // Insertion sort; the comparator need not be a strict weak order.
  for (std::size_t i = 1; i < b.size(); ++i)
    for (std::size_t j = i; j > 0 && ordered_before(b[j], b[j - 1]); --j) std::swap(b[j], b[j - 1]);
  return rs;
}

RootSet refine(const RootSet& rs, mpfr_prec_t precision_bits, mpfr_prec_t max_bits) {
  const mpfr_prec_t p = std::max(precision_bits, rs.precision_bits);
  std::vector<Cx> z;
  for (const auto& b : rs.balls) {
    Cx w(p);
    mpfr_set(w.re.get(), b.re().get(), MPFR_RNDN);
    mpfr_set(w.im.get(), b.im().get(), MPFR_RNDN);
    z.push_back(std::move(w));
  }
  RootSet fresh = certify_from(rs.polynomial, std::move(z), p, std::max(max_bits, p));

  // Re-attach each new ball to the old ball holding the same root.
  const std::size_t n = rs.size();
  RootSet out{rs.polynomial, {}, fresh.precision_bits};
  out.balls.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::optional<std::size_t> match;
    for (std::size_t j = 0; j < n; ++j) {
      if (certainly_disjoint(fresh.balls[j], rs.balls[k])) continue;
      if (match) throw Error(ErrorCode::InternalError, "refined ball overlaps two old balls");
      match = j;
    }
    if (!match) throw Error(ErrorCode::InternalError, "refined root not found in its old ball");
    const ComplexBall& nb = fresh.balls[*match];
    out.balls.push_back(mpfr_cmp(nb.rad().get(), rs.balls[k].rad().get()) <= 0 ? nb : rs.balls[k]);
  }
  return out;
}

bool certified_distinct(std::span<const ComplexBall> values) {
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (!certainly_disjoint(values[i], values[j])) return false;
  return true;
}

}  // namespace galois
