#include "nagsb/akivis.hpp"

#include "nagsb/error.hpp"
#include "nagsb/rewrite.hpp"

namespace nagsb {

MultiplicationTable::MultiplicationTable(std::size_t dim, Field field)
    : dim_(dim), field_(field), gamma_(dim * dim * dim, Coeff::zero(field)) {}

void MultiplicationTable::set(std::size_t i, std::size_t j, std::size_t m, Coeff value) {
  if (i >= dim_ || j >= dim_ || m >= dim_) {
    throw PreconditionViolated("multiplication index out of range");
  }
  if (value.field() != field_) throw FieldMismatch();
  gamma_[(i * dim_ + j) * dim_ + m] = std::move(value);
}

AkivisAlgebra::AkivisAlgebra(std::size_t dim, Field field)
    : dim_(dim),
      field_(field),
      alpha_(dim * dim * dim, Coeff::zero(field)),
      beta_(dim * dim * dim * dim, Coeff::zero(field)) {}

void AkivisAlgebra::check_index(std::size_t i) const {
  if (i >= dim_) {
    throw PreconditionViolated("basis index " + std::to_string(i) + " out of range for dim " +
                               std::to_string(dim_));
  }
}

void AkivisAlgebra::set_bracket(std::size_t i, std::size_t j, std::size_t m, Coeff value) {
  check_index(i);
  check_index(j);
  check_index(m);
  if (i <= j) {
    throw PreconditionViolated("bracket constants are given for i > j only (got i=" +
                               std::to_string(i) + ", j=" + std::to_string(j) + ")");
  }
  if (value.field() != field_) throw FieldMismatch();
  alpha_[(j * dim_ + i) * dim_ + m] = -value;
  alpha_[(i * dim_ + j) * dim_ + m] = std::move(value);
}

void AkivisAlgebra::set_ternary(std::size_t i, std::size_t j, std::size_t k, std::size_t n,
                                Coeff value) {
  check_index(i);
  check_index(j);
  check_index(k);
  check_index(n);
  if (value.field() != field_) throw FieldMismatch();
  beta_[((i * dim_ + j) * dim_ + k) * dim_ + n] = std::move(value);
}

Poly AkivisAlgebra::bracket(std::size_t i, std::size_t j) const {
  std::vector<Term> terms;
  for (std::size_t m = 0; m < dim_; ++m) {
    terms.push_back({Word::leaf({static_cast<std::uint32_t>(m)}), alpha(i, j, m)});
  }
  return Poly::from_terms(std::move(terms));
}

Poly AkivisAlgebra::ternary(std::size_t i, std::size_t j, std::size_t k) const {
  std::vector<Term> terms;
  for (std::size_t n = 0; n < dim_; ++n) {
    terms.push_back({Word::leaf({static_cast<std::uint32_t>(n)}), beta(i, j, k, n)});
  }
  return Poly::from_terms(std::move(terms));
}

std::optional<IdentityViolation> check_akivis_identity(const AkivisAlgebra& a) {
  const std::size_t d = a.dim();
  // [[e_x, e_y], e_z] = sum_m alpha(x,y,m) alpha(m,z,n) e_n
  auto jacobi_term = [&](std::size_t x, std::size_t y, std::size_t z, std::size_t n) {
    Coeff sum = Coeff::zero(a.field());
    for (std::size_t m = 0; m < d; ++m) {
      if (!a.alpha(x, y, m).is_zero()) sum += a.alpha(x, y, m) * a.alpha(m, z, n);
    }
    return sum;
  };
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        std::vector<Coeff> defect(d, Coeff::zero(a.field()));
        bool violated = false;
        for (std::size_t n = 0; n < d; ++n) {
          Coeff lhs = jacobi_term(i, j, k, n) + jacobi_term(j, k, i, n) + jacobi_term(k, i, j, n);
          Coeff rhs = a.beta(i, j, k, n) + a.beta(k, i, j, n) + a.beta(j, k, i, n) -
                      a.beta(i, k, j, n) - a.beta(j, i, k, n) - a.beta(k, j, i, n);
          defect[n] = lhs - rhs;
          violated = violated || !defect[n].is_zero();
        }
        if (violated) return IdentityViolation{i, j, k, std::move(defect)};
      }
    }
  }
  return std::nullopt;
}

AkivisAlgebra akivis_from_algebra(const MultiplicationTable& gamma) {
  const std::size_t d = gamma.dim();
  const Field field = gamma.field();
  AkivisAlgebra a(d, field);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      for (std::size_t m = 0; m < d; ++m) a.set_bracket(i, j, m, gamma(i, j, m) - gamma(j, i, m));
    }
  }
  // (b_i b_j) b_k - b_i (b_j b_k)
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t n = 0; n < d; ++n) {
          Coeff value = Coeff::zero(field);
          for (std::size_t p = 0; p < d; ++p) {
            value += gamma(i, j, p) * gamma(p, k, n);
            value -= gamma(j, k, p) * gamma(i, p, n);
          }
          a.set_ternary(i, j, k, n, std::move(value));
        }
      }
    }
  }
  return a;
}

RelationSet EnvelopingPresentation::relations() const {
  std::vector<Poly> all;
  all.reserve(size());
  for (const auto* family : {&f, &g, &h}) {
    for (const auto& r : *family) all.push_back(r.relation);
  }
  return RelationSet(alphabet, field, std::move(all));
}

EnvelopingPresentation build_presentation(const AkivisAlgebra& a) {
  const std::size_t d = a.dim();
  const Field field = a.field();
  const Coeff one = Coeff::one(field);
  auto e = [](std::size_t i) { return Word::leaf({static_cast<std::uint32_t>(i)}); };
  auto mono = [&](Word w) { return Poly::monomial(std::move(w), one); };
  auto times_letter = [&](const Poly& p, std::size_t k) { return multiply(p, mono(e(k))); };

  EnvelopingPresentation out{a.alphabet(), field, {}, {}, {}};
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Poly f = mono(Word::node(e(i), e(j))) - mono(Word::node(e(j), e(i))) - a.bracket(i, j);
      out.f.push_back({i, j, 0, std::move(f)});
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        Poly g = mono(Word::node(Word::node(e(i), e(j)), e(k))) -
                 mono(Word::node(e(i), Word::node(e(j), e(k)))) - a.ternary(i, j, k);
        out.g.push_back({i, j, k, std::move(g)});
      }
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      for (std::size_t k = j; k < d; ++k) {
        Poly h = mono(Word::node(e(i), Word::node(e(j), e(k)))) -
                 mono(Word::node(e(j), Word::node(e(i), e(k)))) -
                 times_letter(a.bracket(i, j), k) - a.ternary(j, i, k) + a.ternary(i, j, k);
        out.h.push_back({i, j, k, std::move(h)});
      }
    }
  }
  return out;
}

TheoremReport verify_theorem(const AkivisAlgebra& a, const GsOptions& options) {
  TheoremReport report;
  report.identity_holds = !check_akivis_identity(a).has_value();
  RelationSet s = build_presentation(a).relations();
  report.relations = s.size();
  report.verdict = check_gs(s, options);
  if (const auto* ok = std::get_if<IsGS>(&report.verdict)) {
    report.compositions = ok->compositions;
    report.certificate_sizes = ok->certificate_sizes;
  } else {
    report.compositions = all_compositions(s).size();
  }
  report.letters_reduced = true;
  std::vector<Poly> images;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Word letter = Word::leaf({static_cast<std::uint32_t>(i)});
    report.letters_reduced = report.letters_reduced && is_reduced_word(letter, s);
    images.push_back(normal_form(Poly::monomial(letter, Coeff::one(a.field())), s,
                                 options.reduction));
  }
  report.letters_distinct = true;
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (images[i] == images[j]) report.letters_distinct = false;
    }
  }
  return report;
}

std::vector<Word> pbw_basis(const AkivisAlgebra& a, std::size_t max_degree,
                            EnumerationLimits limits) {
  return enumerate_red(build_presentation(a).relations(), a.dim(), max_degree, limits);
}

}  // namespace nagsb
