#include "nagsb/cd_check.hpp"

#include <random>

namespace nagsb {

Word random_word(std::size_t alphabet_size, std::size_t length, std::mt19937_64& rng) {
  if (length == 1) {
    std::uniform_int_distribution<std::uint32_t> letter(0, static_cast<std::uint32_t>(alphabet_size - 1));
    return Word::leaf({letter(rng)});
  }
  std::uniform_int_distribution<std::size_t> split(1, length - 1);
  std::size_t a = split(rng);
  return Word::node(random_word(alphabet_size, a, rng), random_word(alphabet_size, length - a, rng));
}

Context random_context(std::size_t alphabet_size, std::size_t filler_length,
                       std::size_t total_length, std::mt19937_64& rng) {
  Context ctx;
  std::size_t remaining = total_length - filler_length;
  while (remaining > 0) {
    std::uniform_int_distribution<std::size_t> take(1, remaining);
    std::size_t n = take(rng);
    Word sibling = random_word(alphabet_size, n, rng);
    ctx = (rng() & 1U) != 0 ? ctx.then_right(std::move(sibling)) : ctx.then_left(std::move(sibling));
    remaining -= n;
  }
  return ctx;
}

CdReport verify_cd_equivalences(const RelationSet& s, std::size_t alphabet_size,
                                std::size_t max_degree, const CdOptions& options) {
  CdReport report;
  std::mt19937_64 rng(options.seed);
  const Field field = s.field();

  std::vector<std::size_t> usable;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].leading_word().length() <= max_degree) usable.push_back(i);
  }

  if (!usable.empty() && alphabet_size > 0) {
    std::uniform_int_distribution<std::size_t> pick(0, usable.size() - 1);
    std::uniform_int_distribution<std::size_t> count(1, std::max<std::size_t>(1, options.max_swords));
    std::uniform_int_distribution<long> scalar(-3, 3);
    for (std::size_t n = 0; n < options.samples; ++n) {
      Poly f;
      std::size_t k = count(rng);
      for (std::size_t j = 0; j < k; ++j) {
        std::size_t rel = usable[pick(rng)];
        std::size_t lead = s[rel].leading_word().length();
        std::uniform_int_distribution<std::size_t> total(lead, max_degree);
        SWord sw{random_context(alphabet_size, lead, total(rng), rng), rel};
        long c = scalar(rng);
        if (c == 0) c = 1;
        f += sw.value(s) * Coeff(c, field);
      }
      if (f.is_zero()) continue;
      ++report.samples_checked;
      if (is_reduced_word(f.leading_word(), s)) report.leading_word_in_ideal = false;
      NormalForm nf = reduce(f, s, options.reduction);
      if (!nf.residue.is_zero()) report.decreasing_decomposition = false;
      for (std::size_t i = 1; i < nf.certificate.size(); ++i) {
        if (compare(nf.certificate[i - 1].leading, nf.certificate[i].leading) <= 0) {
          report.decreasing_decomposition = false;
        }
      }
    }
  }

  auto oracle_dims = oracle::quotient_dimensions(s.relations(), alphabet_size, max_degree,
                                                 options.limits);
  auto red = enumerate_red(s, alphabet_size, max_degree);
  std::vector<std::size_t> red_upto(max_degree + 1, 0);
  for (const auto& w : red) ++red_upto[w.length()];
  for (std::size_t d = 1; d <= max_degree; ++d) {
    red_upto[d] += red_upto[d - 1];
    report.dimensions.push_back({d, red_upto[d], oracle_dims[d]});
    if (red_upto[d] != oracle_dims[d] && !report.first_failing_degree) {
      report.first_failing_degree = d;
      report.reduced_words_form_basis = false;
    }
  }
  return report;
}

}  // namespace nagsb
