#include "nagsb/gsbasis.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

#include "nagsb/error.hpp"

namespace nagsb {

RelationSet mark_verified(RelationSet s) {
  s.verified_gs_ = true;
  return s;
}

namespace {

Composition make_composition(const RelationSet& s, std::size_t f, std::size_t g,
                             const Position& pos) {
  Composition c{f, g, pos, s[f].leading_word(), {}};
  c.value = s[f] - c.context().plug(s[g]);
  if (!c.value.is_zero() && compare(c.value.leading_word(), c.ambient) >= 0) {
    throw Error("composition value does not drop below its ambient word");
  }
  return c;
}

void compositions_into(const RelationSet& s, std::size_t f, std::vector<Composition>& out) {
  s[f].leading_word().for_each_subtree([&](const Position& pos, const Word& sub) {
    for (std::size_t g : s.with_leading(sub)) {
      if (g == f && pos.empty()) continue;
      out.push_back(make_composition(s, f, g, pos));
    }
  });
}

}  // namespace

std::vector<Composition> all_compositions(const RelationSet& s) {
  std::vector<Composition> out;
  for (std::size_t f = 0; f < s.size(); ++f) compositions_into(s, f, out);
  return out;
}

Triviality is_trivial(const Composition& c, const RelationSet& s,
                      const ReductionOptions& options) {
  if (c.value.is_zero()) return Trivial{};
  ReductionOptions opts = options;
  opts.record_certificate = true;
  NormalForm nf = reduce(c.value, s, opts);
  if (!nf.residue.is_zero()) return NonTrivial{std::move(nf.residue)};
  for (const auto& step : nf.certificate) {
    if (compare(step.leading, c.ambient) >= 0) return NonTrivial{c.value};
  }
  return Trivial{std::move(nf.certificate)};
}

GsVerdict check_gs(const RelationSet& s, const GsOptions& options) {
  auto comps = all_compositions(s);
  std::vector<std::optional<Triviality>> results(comps.size());

  unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(comps.size())));

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= comps.size() || failed.load()) return;
      try {
        results[i] = is_trivial(comps[i], s, options.reduction);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  if (error) std::rethrow_exception(error);

  IsGS ok{comps.size(), {}};
  ok.certificate_sizes.reserve(comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (auto* bad = std::get_if<NonTrivial>(&*results[i])) {
      return CounterExample{std::move(comps[i]), std::move(bad->residue)};
    }
    ok.certificate_sizes.push_back(std::get<Trivial>(*results[i]).certificate.size());
  }
  return ok;
}

RelationSet verified(RelationSet s, const GsOptions& options) {
  auto verdict = check_gs(s, options);
  if (std::holds_alternative<CounterExample>(verdict)) {
    throw PreconditionViolated("relation set is not a Groebner-Shirshov basis");
  }
  return mark_verified(std::move(s));
}

CompletionResult complete(const RelationSet& s, std::size_t max_degree,
                          const ReductionOptions& options) {
  RelationSet current = s;
  std::vector<Composition> queue = all_compositions(current);
  std::vector<Poly> pending;
  std::size_t added = 0;

  auto before = [](const Composition& a, const Composition& b) {
    if (auto c = compare(a.ambient, b.ambient); c != 0) return c < 0;
    if (a.f_index != b.f_index) return a.f_index < b.f_index;
    if (a.pos != b.pos) return a.pos < b.pos;
    return a.g_index < b.g_index;
  };

  while (!queue.empty()) {
    auto smallest = std::min_element(queue.begin(), queue.end(), before);
    Composition c = std::move(*smallest);
    queue.erase(smallest);

    auto verdict = is_trivial(c, current, options);
    auto* bad = std::get_if<NonTrivial>(&verdict);
    if (bad == nullptr) continue;
    if (c.ambient.length() > max_degree) {
      pending.push_back(std::move(bad->residue));
      continue;
    }
    std::size_t fresh = current.size();
    current = current.with(std::move(bad->residue));
    ++added;
    // Old trivial compositions stay trivial, so only those involving the
    // new relation need to be queued.
    std::vector<Composition> extra;
    compositions_into(current, fresh, extra);
    const Word& lead = current[fresh].leading_word();
    for (std::size_t f = 0; f < fresh; ++f) {
      for (const auto& pos : find_occurrences(current[f].leading_word(), lead)) {
        extra.push_back(make_composition(current, f, fresh, pos));
      }
    }
    for (auto& e : extra) queue.push_back(std::move(e));
  }

  if (!pending.empty()) return CapReached{std::move(current), std::move(pending)};
  return Completed{mark_verified(std::move(current)), added};
}

bool ideal_membership(const Poly& f, const RelationSet& s, const ReductionOptions& options) {
  if (!s.verified_gs()) {
    throw PreconditionViolated("ideal membership needs a verified Groebner-Shirshov basis");
  }
  return normal_form(f, s, options).is_zero();
}

bool equal_in_quotient(const Poly& f, const Poly& g, const RelationSet& s,
                       const ReductionOptions& options) {
  return ideal_membership(f - g, s, options);
}

}  // namespace nagsb
