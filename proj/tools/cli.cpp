#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <numeric>

#include "io.hpp"
#include "nagsb/akivis.hpp"
#include "nagsb/gsbasis.hpp"
#include "nagsb/rewrite.hpp"

namespace nagsb::cli {

namespace {

struct Settings {
  std::size_t max_degree = 6;
  std::size_t step_cap = 1'000'000;
  std::uint64_t seed = 0;
  std::string coeff = "rational";
  bool skip_identity_check = false;
  bool random_strategy = false;

  std::string input;
  std::vector<std::string> polys;

  ReductionOptions reduction() const {
    ReductionOptions r;
    r.step_cap = step_cap;
    r.seed = seed;
    r.selection = random_strategy ? Selection::Random : Selection::Greatest;
    return r;
  }
};

void describe_counterexample(const CounterExample& cx, const RelationSet& s, std::ostream& out) {
  const auto& c = cx.composition;
  out << "counterexample: composition (#" << c.f_index << ", #" << c.g_index << ") at "
      << render_position(c.pos) << " of " << render_word(c.ambient, s.alphabet()) << "\n";
  out << "residue: " << render_poly(cx.residue, s.alphabet()) << "\n";
  out << "note: residue is the default-strategy normal form; confirm non-triviality with the"
         " linear-algebra oracle\n";
}

int check_gs_command(const Settings& st, std::ostream& out) {
  RelationSet s = io::load_presentation(st.input, Field::parse(st.coeff));
  GsOptions opts;
  opts.reduction = st.reduction();
  auto verdict = check_gs(s, opts);
  out << "relations: " << s.size() << "\n";
  if (const auto* ok = std::get_if<IsGS>(&verdict)) {
    out << "compositions: " << ok->compositions << "\n";
    out << "GS: yes\n";
    return kSuccess;
  }
  out << "compositions: " << all_compositions(s).size() << "\n";
  describe_counterexample(std::get<CounterExample>(verdict), s, out);
  out << "GS: no\n";
  return kNegative;
}

int normalize_command(const Settings& st, std::ostream& out) {
  Field field = Field::parse(st.coeff);
  RelationSet s = io::load_presentation(st.input, field);
  Poly f = parse_poly(st.polys.at(0), s.alphabet(), field);
  out << render_poly(normal_form(f, s, st.reduction()), s.alphabet()) << "\n";
  return kSuccess;
}

int equal_command(const Settings& st, std::ostream& out) {
  Field field = Field::parse(st.coeff);
  GsOptions opts;
  opts.reduction = st.reduction();
  RelationSet s = verified(io::load_presentation(st.input, field), opts);
  Poly f = parse_poly(st.polys.at(0), s.alphabet(), field);
  Poly g = parse_poly(st.polys.at(1), s.alphabet(), field);
  bool eq = equal_in_quotient(f, g, s, st.reduction());
  out << "lhs: " << render_poly(normal_form(f, s, st.reduction()), s.alphabet()) << "\n";
  out << "rhs: " << render_poly(normal_form(g, s, st.reduction()), s.alphabet()) << "\n";
  out << "equal: " << (eq ? "yes" : "no") << "\n";
  return eq ? kSuccess : kNegative;
}

int complete_command(const Settings& st, std::ostream& out) {
  RelationSet s = io::load_presentation(st.input, Field::parse(st.coeff));
  auto result = complete(s, st.max_degree, st.reduction());
  if (const auto* done = std::get_if<Completed>(&result)) {
    out << io::render_presentation(done->basis);
    out << "# added: " << done->added << "\n";
    out << "COMPLETE: fixpoint\n";
    return kSuccess;
  }
  const auto& cap = std::get<CapReached>(result);
  out << io::render_presentation(cap.basis);
  for (const auto& p : cap.pending) out << "# pending: " << render_poly(p, cap.basis.alphabet()) << "\n";
  out << "COMPLETE: cap\n";
  return kNegative;
}

void print_words(const std::vector<Word>& words, const Alphabet& alphabet, std::ostream& out) {
  for (const auto& w : words) out << render_word(w, alphabet) << "\n";
}

int basis_command(const Settings& st, std::ostream& out) {
  RelationSet s = io::load_presentation(st.input, Field::parse(st.coeff));
  print_words(enumerate_red(s, st.max_degree), s.alphabet(), out);
  return kSuccess;
}

AkivisAlgebra load_algebra(const Settings& st) {
  io::AkivisLoadOptions opts;
  opts.field = Field::parse(st.coeff);
  opts.check_identity = !st.skip_identity_check;
  return io::load_akivis(st.input, opts);
}

int akivis_verify_command(const Settings& st, std::ostream& out) {
  AkivisAlgebra a = load_algebra(st);
  GsOptions opts;
  opts.reduction = st.reduction();
  auto presentation = build_presentation(a);
  TheoremReport report = verify_theorem(a, opts);
  out << "dim: " << a.dim() << "\n";
  if (auto v = check_akivis_identity(a)) {
    out << "identity: violated at (e" << v->i << ", e" << v->j << ", e" << v->k << ")\n";
  } else {
    out << "identity: holds\n";
  }
  out << "relations: " << report.relations << " (f: " << presentation.f.size()
      << ", g: " << presentation.g.size() << ", h: " << presentation.h.size() << ")\n";
  out << "compositions: " << report.compositions << "\n";
  if (report.is_gs()) {
    const auto& sizes = report.certificate_sizes;
    std::size_t total = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
    std::size_t longest = sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
    out << "certificate steps: total " << total << ", longest " << longest << "\n";
  } else {
    describe_counterexample(std::get<CounterExample>(report.verdict), presentation.relations(), out);
  }
  out << "embedding: " << (report.embedding_holds() ? "yes" : "no") << "\n";
  out << "GS: " << (report.is_gs() ? "yes" : "no") << "\n";
  return report.is_gs() ? kSuccess : kNegative;
}

int akivis_basis_command(const Settings& st, std::ostream& out) {
  AkivisAlgebra a = load_algebra(st);
  print_words(pbw_basis(a, st.max_degree), a.alphabet(), out);
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Groebner-Shirshov bases in free non-associative algebras", "nagsb"};
  app.require_subcommand(1);
  app.fallthrough();

  Settings st;
  app.add_option("--max-degree", st.max_degree, "Degree cap for completion and bases")
      ->check(CLI::PositiveNumber);
  app.add_option("--step-cap", st.step_cap, "Maximum reduction steps per normal form")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", st.seed, "Seed for randomized strategies");
  app.add_option("--coeff", st.coeff, "Coefficient field: rational or prime:P");
  app.add_flag("--skip-identity-check", st.skip_identity_check,
               "Accept Akivis input that violates the Akivis identity");

  auto* normalize = app.add_subcommand("normalize", "Normal form of a polynomial modulo S");
  normalize->add_option("presentation", st.input)->required();
  normalize->add_option("poly", st.polys)->required()->expected(1);
  normalize->add_flag("--random-strategy", st.random_strategy,
                      "Pick reductions at random (seeded by --seed)");

  auto* check = app.add_subcommand("check-gs", "Check whether S is a Groebner-Shirshov basis");
  check->add_option("presentation", st.input)->required();

  auto* comp = app.add_subcommand("complete", "Shirshov completion up to --max-degree");
  comp->add_option("presentation", st.input)->required();

  auto* basis = app.add_subcommand("basis", "Reduced words up to --max-degree");
  basis->add_option("presentation", st.input)->required();

  auto* equal = app.add_subcommand("equal", "Word problem: are two polynomials equal mod S");
  equal->add_option("presentation", st.input)->required();
  equal->add_option("polys", st.polys)->required()->expected(2);

  auto* akv = app.add_subcommand("akivis-verify", "Check the enveloping-algebra basis of an Akivis algebra");
  akv->add_option("akivis", st.input)->required();

  auto* akb = app.add_subcommand("akivis-basis", "Reduced-word basis of U(A) up to --max-degree");
  akb->add_option("akivis", st.input)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*normalize) return normalize_command(st, out);
    if (*check) return check_gs_command(st, out);
    if (*comp) return complete_command(st, out);
    if (*basis) return basis_command(st, out);
    if (*equal) return equal_command(st, out);
    if (*akv) return akivis_verify_command(st, out);
    if (*akb) return akivis_basis_command(st, out);
  } catch (const PreconditionViolated& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace nagsb::cli
