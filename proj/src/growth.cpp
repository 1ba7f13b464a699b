#include "minvar/growth.hpp"

#include <cmath>

#include "minvar/numeric.hpp"

namespace minvar {

std::vector<mpz_class> b_sequence(const MultisetSpec& spec, long order) {
  if (order < 0) throw SpecError("order must be >= 0");
  if (order == 0) return {mpz_class(1)};
  return recip_one_minus(spec.coefficients(order)).coeffs();
}

double nth_root(const mpz_class& value, long n) {
  if (n < 1) throw SpecError("nth_root requires n >= 1");
  if (value <= 0) throw std::domain_error("nth_root requires a positive integer");
  long double l = log2_mpz(value);
  return static_cast<double>(std::exp2(l / static_cast<long double>(n)));
}

RootsTable roots_table(const MultisetSpec& spec, long order) {
  if (order < 1) throw SpecError("order must be >= 1");
  auto b = b_sequence(spec, order);
  RootsTable t;
  t.rows.reserve(static_cast<size_t>(order));
  for (long n = 1; n <= order; ++n) {
    RootsRow row{n, b[n], std::nullopt};
    if (row.b > 0) row.root = nth_root(row.b, n);
    t.rows.push_back(std::move(row));
  }
  return t;
}

RootsTable gcd_subsequence_roots(const MultisetSpec& spec, long order) {
  if (order < 1) throw SpecError("order must be >= 1");
  long d = spec.support_gcd(order);
  auto b = b_sequence(spec, order);
  RootsTable t;
  for (long n = d; n <= order; n += d) {
    RootsRow row{n, b[n], std::nullopt};
    if (row.b > 0) row.root = nth_root(row.b, n);
    t.rows.push_back(std::move(row));
  }
  return t;
}

namespace {

// Grows the truncation order until a probe certifies; owns the cached series.
class Certifier {
 public:
  Certifier(const MultisetSpec& spec, long initial_order, long max_order)
      : spec_(spec), order_(std::min(initial_order, max_order)), max_order_(max_order),
        a_(spec.coefficients(order_)) {
    if (max_order < 1) throw SpecError("max order must be >= 1");
  }

  long order() const { return order_; }
  const TruncatedSeries& series() const { return a_; }

  void grow() {
    if (order_ >= max_order_)
      throw CertificationError(
          "cannot certify probe within the configured max order (" +
          std::to_string(max_order_) + "); raise MINVAR_MAX_ORDER or relax eps");
    order_ = std::min(order_ * 2, max_order_);
    a_ = spec_.coefficients(order_);
  }

  enum class Outcome { High, Low, Undecided };

  Outcome attempt(const mpq_class& q, CertificateWitness& w) const {
    mpq_class partial = eval_lower(a_, q);
    if (partial >= 1) {
      w = {order_, q, partial, mpq_class(0)};
      return Outcome::High;
    }
    mpq_class tail = q == 0 ? mpq_class(0) : spec_.tail_bound(q, order_);
    if (partial + tail < 1) {
      w = {order_, q, partial, tail};
      return Outcome::Low;
    }
    return Outcome::Undecided;
  }

  Outcome certify(const mpq_class& q, CertificateWitness& w) {
    for (;;) {
      auto o = attempt(q, w);
      if (o != Outcome::Undecided) return o;
      grow();
    }
  }

 private:
  const MultisetSpec& spec_;
  long order_;
  long max_order_;
  TruncatedSeries a_;
};

}  // namespace

RootBracket solve_alpha(const MultisetSpec& spec, const mpq_class& eps,
                        const SolverOptions& opts) {
  if (eps <= 0) throw SpecError("eps must be positive");
  const TailMajorant& tm = spec.majorant();

  long initial = opts.initial_order;
  if (tm.form == TailMajorant::Form::Finite && !spec.terms().empty())
    initial = std::max(initial, spec.terms().back().exponent);  // exact polynomial evaluation
  Certifier cert(spec, initial, opts.max_order);

  // Probe ceiling. Polynomials have no finite radius and a(1) >= 1 always
  // certifies there; series with a finite radius are probed up to
  // rho * (1 - 2^-margin).
  mpq_class q_hi = 1;
  if (tm.radius) {
    mpq_class margin = make_rational(1, mpz_class(1) << static_cast<unsigned long>(
                                            opts.radius_margin_log2));
    q_hi = *tm.radius * (1 - margin);
  }

  if (tm.summable_at_radius) {
    // The series converges at rho, so a(q) <= partial(rho) + tail(rho) for
    // every q <= rho, coefficientwise. Certify the supremum there first.
    const mpq_class rho = *tm.radius;
    for (;;) {
      mpq_class partial = eval_lower(cert.series(), rho);
      if (partial >= 1) break;  // root at or below the radius: bisect instead
      mpq_class tail = *spec.tail_bound_at_radius(cert.order());
      if (partial + tail < 1) {
        while (tail > opts.sup_tail_target && cert.order() * 2 <= opts.max_order) {
          cert.grow();
          partial = eval_lower(cert.series(), rho);
          tail = *spec.tail_bound_at_radius(cert.order());
        }
        RootBracket rb;
        rb.kind = RootBracket::Kind::NoRootBelowRadius;
        rb.rho = rho;
        rb.certified_sup = partial + tail;
        rb.sup_order = cert.order();
        return rb;
      }
      cert.grow();
    }
  }

  CertificateWitness hi_w;
  if (cert.certify(q_hi, hi_w) == Certifier::Outcome::Low)
    throw CertificationError(
        "a(q) < 1 certified up to the probe ceiling; the root lies within the "
        "radius margin and cannot be bracketed");

  mpq_class lo = 0, hi = q_hi;
  CertificateWitness lo_w{cert.order(), mpq_class(0), mpq_class(0), mpq_class(0)};
  while (hi - lo > eps) {
    mpq_class mid = (lo + hi) / 2;
    CertificateWitness w;
    if (cert.certify(mid, w) == Certifier::Outcome::High) {
      hi = mid;
      hi_w = w;
    } else {
      lo = mid;
      lo_w = w;
    }
  }

  RootBracket rb;
  rb.kind = RootBracket::Kind::Bracketed;
  rb.alpha_lo = lo;
  rb.alpha_hi = hi;
  rb.lo_witness = lo_w;
  rb.hi_witness = hi_w;
  return rb;
}

std::pair<mpq_class, mpq_class> beta_bracket(const RootBracket& rb) {
  if (rb.kind != RootBracket::Kind::Bracketed)
    throw std::domain_error("beta_bracket requires a bracketed verdict (beta equals 1/rho "
                            "only as an uncertified limit in the no-root case)");
  if (rb.alpha_lo <= 0)
    throw std::domain_error("bracket touches zero; beta upper endpoint is unbounded");
  return {mpq_class(1) / rb.alpha_hi, mpq_class(1) / rb.alpha_lo};
}

bool verify_bracket(const MultisetSpec& spec, const RootBracket& rb) {
  if (rb.kind == RootBracket::Kind::NoRootBelowRadius) {
    if (rb.sup_order < 1) return false;
    auto tail = spec.tail_bound_at_radius(rb.sup_order);
    if (!tail) return false;
    mpq_class partial = eval_lower(spec.coefficients(rb.sup_order), rb.rho);
    return partial + *tail == rb.certified_sup && rb.certified_sup < 1;
  }
  if (!(rb.alpha_lo < rb.alpha_hi)) return false;
  if (rb.lo_witness.probe != rb.alpha_lo || rb.hi_witness.probe != rb.alpha_hi) return false;

  mpq_class p_lo = eval_lower(spec.coefficients(rb.lo_witness.order), rb.alpha_lo);
  mpq_class t_lo = rb.alpha_lo == 0 ? mpq_class(0)
                                    : spec.tail_bound(rb.alpha_lo, rb.lo_witness.order);
  if (p_lo != rb.lo_witness.partial || t_lo != rb.lo_witness.tail) return false;
  if (!(p_lo + t_lo < 1)) return false;

  mpq_class p_hi = eval_lower(spec.coefficients(rb.hi_witness.order), rb.alpha_hi);
  if (p_hi != rb.hi_witness.partial) return false;
  return p_hi >= 1;
}

}  // namespace minvar
