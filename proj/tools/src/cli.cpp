#include "cli.hpp"

#include <charconv>
#include <future>
#include <memory>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "orbent/dynkin.hpp"
#include "orbent/entropy.hpp"
#include "orbent/errors.hpp"
#include "orbent/exact.hpp"
#include "orbent/oracle.hpp"
#include "orbent/probvec.hpp"
#include "orbent/reflection.hpp"
#include "orbent/symplectic.hpp"
#include "record_writer.hpp"

namespace orbent::cli {

namespace {

using Record = nlohmann::ordered_json;

struct IdentityFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::uint64_t> parse_u64_list(const std::string& text, const char* what) {
  std::vector<std::uint64_t> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view piece(text.data() + start, (comma == std::string::npos ? text.size() : comma) - start);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size()) {
      throw ParseError(std::string("malformed ") + what + " '" + text + "'");
    }
    out.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string join(const std::vector<std::uint64_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

std::string family_name(Family f) { return std::string(1, family_tag(f)); }

// --- count ---------------------------------------------------------------

struct CountArgs {
  std::string family;
  std::uint64_t n = 0;
  std::uint64_t q = 0;
  std::uint64_t s = 0;
  std::string dist;
  std::string increments;
};

// --- converge ------------------------------------------------------------

struct ConvergePoint {
  double value;
  double limit;
};

void check_schedule_point(std::uint64_t n, const ProbVec& p, bool reflection) {
  const auto domain = [&](const std::string& why) {
    return InvalidArgument("n = " + std::to_string(n) + " " + why);
  };
  if (n == 0 || !p.admits(n)) throw domain("is not in N_P for P = " + p.to_string());
  if (reflection) {
    for (std::uint64_t c : p.counts(n)) {
      if (c <= 3) throw domain("gives n*p_i = " + std::to_string(c) + ", need n*p_i > 3");
    }
  }
}

void emit_converge(RecordWriter& w, const std::vector<std::uint64_t>& schedule, const Record& prefix,
                   const std::function<ConvergePoint(std::uint64_t)>& point) {
  std::vector<std::future<ConvergePoint>> jobs;
  jobs.reserve(schedule.size());
  for (std::uint64_t n : schedule) jobs.push_back(std::async(std::launch::async, point, n));
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    const ConvergePoint pt = jobs[i].get();
    Record r = prefix;
    r["n"] = schedule[i];
    r["value"] = round_to(pt.value, 12);
    r["limit"] = round_to(pt.limit, 12);
    r["error"] = round_to(std::abs(pt.value - pt.limit), 9);
    w.write(r);
  }
}

// --- oracle-verify -------------------------------------------------------

class OracleRun {
 public:
  explicit OracleRun(RecordWriter& w) : w_(w) {}

  template <typename A, typename B>
  void compare(const std::string& scope, const std::string& check, const A& oracle, const B& closed) {
    const bool pass = oracle == closed;
    Record r;
    r["scope"] = scope;
    r["check"] = check;
    r["oracle"] = oracle.to_string();
    r["closed_form"] = closed.to_string();
    r["pass"] = pass;
    w_.write(r);
    failures_ += pass ? 0 : 1;
  }

  std::size_t failures() const { return failures_; }

 private:
  RecordWriter& w_;
  std::size_t failures_ = 0;
};

void verify_words(OracleRun& run) {
  for (std::uint64_t n = 1; n <= 8; ++n) {
    for (std::uint64_t a = 0; a <= n; ++a) {
      for (std::uint64_t b = 0; a + b <= n; ++b) {
        const std::vector<std::uint64_t> counts{a, b, n - a - b};
        run.compare("words", "type class n=" + std::to_string(n) + " counts=" + join(counts),
                    oracle::count_type_class(n, counts), multinomial(n, counts));
      }
    }
  }
}

void verify_reflection(OracleRun& run, std::size_t max_rank) {
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    for (std::size_t r = min_rank(f); r <= max_rank; ++r) {
      const std::string name = family_name(f) + std::to_string(r);
      const IntPolynomial census = oracle::reflection_length_census(f, r);
      run.compare("reflection", "group order " + name, poly_eval(census, Natural(1)), group_order(f, r));
      run.compare("reflection", "poincare " + name, census, poincare_closed(f, r));
      for (std::uint32_t mask = 1; mask < (1u << r); ++mask) {
        std::vector<std::size_t> nodes;
        for (std::size_t i = 0; i < r; ++i) {
          if (mask & (1u << i)) nodes.push_back(i + 1);
        }
        const NodeRemovalSet removal(nodes);
        std::string label;
        for (std::size_t i = 0; i < nodes.size(); ++i) label += (i ? "," : "") + std::to_string(nodes[i]);
        run.compare("reflection", "parabolic " + name + " minus {" + label + "}",
                    oracle::parabolic_length_census(f, r, removal),
                    poincare_parabolic(remove_nodes(Diagram(f, r), removal)));
      }
    }
  }
}

void verify_symplectic(OracleRun& run) {
  const auto tag = [](std::uint64_t a, std::uint64_t b, std::uint64_t q) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(q) + ")";
  };
  for (std::uint64_t q : {2, 3}) {
    for (std::uint64_t m = 1; m <= 3; ++m) {
      run.compare("symplectic", "gl_order(" + std::to_string(m) + "," + std::to_string(q) + ")",
                  oracle::enumerate_general_linear(m, q), gl_order(m, q));
    }
    for (std::uint64_t d = 1; d <= 4; ++d) {
      for (std::uint64_t s = 0; s <= d; ++s) {
        const std::vector<std::uint64_t> parts{s, d - s};
        run.compare("symplectic", "subspaces" + tag(s, d, q), oracle::enumerate_subspaces(s, d, q),
                    q_multinomial(d, parts, q));
      }
    }
    for (std::uint64_t n = 1; n <= oracle::kMaxHalfDimension; ++n) {
      run.compare("symplectic", "sp_order(" + std::to_string(n) + "," + std::to_string(q) + ")",
                  oracle::enumerate_symplectic_group(n, q), sp_order(n, q));
      for (std::uint64_t s = 0; s <= n; ++s) {
        run.compare("symplectic", "ig_count" + tag(s, n, q), oracle::enumerate_isotropic_subspaces(s, n, q),
                    ig_count(s, n, q));
      }
    }
    const std::vector<std::vector<std::uint64_t>> flags{{1}, {2}, {1, 1}};
    for (const auto& inc : flags) {
      run.compare("symplectic", "flags [" + join(inc) + "] n=2 q=" + std::to_string(q),
                  oracle::enumerate_isotropic_flags(inc, 2, q), isotropic_flag_count(FlagType(inc, 2, q)));
    }
  }
  for (std::uint64_t s = 0; s <= 2; ++s) {
    const oracle::OrbitStabilizerReport rep = oracle::stabilizer_and_orbit_check(s, 2, 2);
    run.compare("symplectic", "orbit" + tag(s, 2, 2), rep.orbit, rep.expected_orbit);
    run.compare("symplectic", "stabilizer" + tag(s, 2, 2), rep.stabilizer, rep.expected_stabilizer);
    run.compare("symplectic", "orbit*stabilizer" + tag(s, 2, 2), rep.orbit * rep.stabilizer, rep.expected_group);
  }
}

// --- chain-check ---------------------------------------------------------

struct ChainArgs {
  std::string target;
  std::string dist;
  std::string blocks;
  std::optional<std::string> family;
  std::optional<std::uint64_t> n;
  std::optional<std::uint64_t> q;
};

template <typename T>
const T& need(const std::optional<T>& v, const char* flag, const std::string& target) {
  if (!v) throw ParseError("--target " + target + " requires " + flag);
  return *v;
}

int run_chain_check(const ChainArgs& a, RecordWriter& w, std::ostream& err) {
  static const std::vector<std::string> kTargets{"shannon", "reflective", "symplectic-entropy",
                                                 "reflective-cardinality", "symplectic-cardinality", "poincare"};
  if (std::find(kTargets.begin(), kTargets.end(), a.target) == kTargets.end()) {
    throw ParseError("unknown chain-check target '" + a.target + "'");
  }
  const ProbVec p = ProbVec::parse(a.dist);
  const CoarseMap pi = CoarseMap::parse(a.blocks);
  if (pi.domain_size() != p.size()) {
    throw InvalidArgument("--blocks " + a.blocks + " covers " + std::to_string(pi.domain_size()) +
                          " outcomes but P has " + std::to_string(p.size()));
  }
  Record r;
  r["target"] = a.target;
  bool holds = false;

  if (a.target == "shannon" || a.target == "reflective") {
    r["dist"] = p.to_string();
    r["blocks"] = pi.to_string();
    const double res = a.target == "shannon" ? shannon_chain_residual(p, pi) : reflective_chain_residual(p, pi);
    holds = std::abs(res) < kChainResidualTolerance;
    r["residual"] = res;
  } else if (a.target == "symplectic-entropy") {
    r["dist"] = p.to_string();
    r["blocks"] = pi.to_string();
    const Rational res = symplectic_chain_residual(p, pi);
    holds = res.is_zero();
    r["residual"] = res.to_string();
  } else if (a.target == "symplectic-cardinality") {
    const std::uint64_t n = need(a.n, "--n", a.target);
    const std::uint64_t q = need(a.q, "--q", a.target);
    r["n"] = n;
    r["q"] = q;
    r["dist"] = p.to_string();
    r["blocks"] = pi.to_string();
    const ChainIdentityReport rep = symplectic_chain_identity_check(n, p, pi, q);
    holds = rep.equal;
    r["lhs"] = rep.lhs.to_string();
    r["rhs"] = rep.rhs.to_string();
    r["residual"] = (Rational(rep.lhs) - Rational(rep.rhs)).to_string();
  } else {
    const Family f = parse_family(need(a.family, "--family", a.target));
    const std::uint64_t n = need(a.n, "--n", a.target);
    r["family"] = family_name(f);
    r["n"] = n;
    r["dist"] = p.to_string();
    r["blocks"] = pi.to_string();
    if (a.target == "reflective-cardinality") {
      const CardinalityReport rep = coarsening_cardinality_check(f, n, p, pi);
      holds = rep.equal;
      r["lhs"] = rep.lhs.to_string();
      r["rhs"] = rep.rhs.to_string();
      r["residual"] = (Rational(rep.lhs) - Rational(rep.rhs)).to_string();
    } else {
      const PoincareReport rep = coarsening_poincare_check(f, n, p, pi);
      holds = rep.zero;
      r["residual"] = rep.difference.to_string();
      if (!holds) {
        r["lhs"] = rep.lhs.to_string();
        r["rhs"] = rep.rhs.to_string();
      }
    }
  }
  r["holds"] = holds;
  w.write(r);
  if (!holds) {
    err << "error: chain identity '" << a.target << "' does not hold\n";
    return kIdentityFailure;
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orbit cardinalities and the entropies they converge to", "orbit-entropy"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format_text = "json";
  app.add_option("--format", format_text, "Output format: json (one object per line) or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // count
  CountArgs ca;
  CLI::App* count = app.add_subcommand("count", "Exact orbit and flag counts");
  count->require_subcommand(1);
  CLI::App* count_refl = count->add_subcommand("reflection", "|W / W_P| for a classical reflection group");
  count_refl->add_option("--family", ca.family, "A, B, C or D")->required();
  count_refl->add_option("--n", ca.n, "Block length; the diagram has rank n-1")->required();
  count_refl->add_option("--dist", ca.dist, "Probability vector, e.g. 1/2,1/2")->required();
  CLI::App* count_sp = count->add_subcommand("symplectic", "|Sp / P| for the isotropic flag attached to P");
  count_sp->add_option("--n", ca.n, "Half dimension")->required();
  count_sp->add_option("--q", ca.q, "Field size")->required();
  count_sp->add_option("--dist", ca.dist, "Probability vector")->required();
  CLI::App* count_ig = count->add_subcommand("isotropic", "Totally isotropic s-subspaces of F_q^(2n)");
  count_ig->add_option("--s", ca.s, "Subspace dimension")->required();
  count_ig->add_option("--n", ca.n, "Half dimension")->required();
  count_ig->add_option("--q", ca.q, "Field size")->required();
  CLI::App* count_flag = count->add_subcommand("flag", "Isotropic flags with given dimension increments");
  count_flag->add_option("--increments", ca.increments, "Dimension increments, e.g. 1,1")->required();
  count_flag->add_option("--n", ca.n, "Half dimension")->required();
  count_flag->add_option("--q", ca.q, "Field size")->required();

  // entropy
  std::string entropy_dist;
  CLI::App* entropy = app.add_subcommand("entropy", "Shannon, Tsallis-2, reflective and symplectic entropies");
  entropy->add_option("--dist", entropy_dist, "Probability vector")->required();

  // converge
  std::string conv_family, conv_dist, conv_schedule;
  std::uint64_t conv_q = 0;
  CLI::App* converge = app.add_subcommand("converge", "Normalized log counts against their entropy limit");
  converge->require_subcommand(1);
  CLI::App* conv_refl = converge->add_subcommand("reflection", "(1/n) ln |W / W_P|");
  conv_refl->add_option("--family", conv_family, "A, B, C or D")->required();
  conv_refl->add_option("--dist", conv_dist, "Probability vector")->required();
  conv_refl->add_option("--n", conv_schedule, "Comma-separated block lengths")->required();
  CLI::App* conv_sp = converge->add_subcommand("symplectic", "(1/n^2) log_q |Sp / P|");
  conv_sp->add_option("--q", conv_q, "Field size")->required();
  conv_sp->add_option("--dist", conv_dist, "Probability vector")->required();
  conv_sp->add_option("--n", conv_schedule, "Comma-separated half dimensions")->required();

  // chain-check
  ChainArgs chain;
  std::string chain_family;
  std::uint64_t chain_n = 0, chain_q = 0;
  CLI::App* chain_cmd = app.add_subcommand("chain-check", "Check a coarse-graining identity");
  chain_cmd->add_option("--target", chain.target,
                        "shannon, reflective, symplectic-entropy, reflective-cardinality, "
                        "symplectic-cardinality or poincare")
      ->required();
  chain_cmd->add_option("--dist", chain.dist, "Probability vector")->required();
  chain_cmd->add_option("--blocks", chain.blocks, "Block sizes of the coarse map, e.g. 2,1")->required();
  CLI::Option* opt_family = chain_cmd->add_option("--family", chain_family, "A, B, C or D");
  CLI::Option* opt_n = chain_cmd->add_option("--n", chain_n, "Block length or half dimension");
  CLI::Option* opt_q = chain_cmd->add_option("--q", chain_q, "Field size");

  // oracle-verify
  std::string scope = "all";
  std::size_t max_rank = oracle::kMaxCensusRank;
  CLI::App* verify = app.add_subcommand("oracle-verify", "Compare brute-force enumerations with closed forms");
  verify->add_option("--scope", scope, "all, words, reflection or symplectic")
      ->check(CLI::IsMember({"all", "words", "reflection", "symplectic"}));
  verify->add_option("--max-rank", max_rank, "Largest diagram rank for the reflection census");

  std::vector<std::string> storage{"orbit-entropy"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  try {
    RecordWriter w(parse_format(format_text), out);

    if (count_refl->parsed()) {
      const Family f = parse_family(ca.family);
      const ProbVec p = ProbVec::parse(ca.dist);
      Record r;
      r["kind"] = "reflection";
      r["family"] = family_name(f);
      r["n"] = ca.n;
      r["dist"] = p.to_string();
      r["value"] = orbit_count(f, ca.n, p).to_string();
      w.write(r);
    } else if (count_sp->parsed()) {
      const ProbVec p = ProbVec::parse(ca.dist);
      Record r;
      r["kind"] = "symplectic";
      r["n"] = ca.n;
      r["q"] = ca.q;
      r["dist"] = p.to_string();
      r["value"] = sp_quotient_closed(ca.n, p, ca.q).to_string();
      w.write(r);
    } else if (count_ig->parsed()) {
      Record r;
      r["kind"] = "isotropic";
      r["s"] = ca.s;
      r["n"] = ca.n;
      r["q"] = ca.q;
      r["value"] = ig_count(ca.s, ca.n, ca.q).to_string();
      w.write(r);
    } else if (count_flag->parsed()) {
      const FlagType ft(parse_u64_list(ca.increments, "--increments"), ca.n, ca.q);
      Record r;
      r["kind"] = "flag";
      r["increments"] = join(ft.increments());
      r["n"] = ca.n;
      r["q"] = ca.q;
      r["value"] = isotropic_flag_count(ft).to_string();
      w.write(r);
    } else if (entropy->parsed()) {
      const ProbVec p = ProbVec::parse(entropy_dist);
      Record r;
      r["dist"] = p.to_string();
      r["H"] = round_to(shannon(p), 12);
      r["H2"] = tsallis2(p).to_string();
      r["HR"] = round_to(reflective(p), 12);
      r["HSp"] = symplectic_entropy(p).to_string();
      w.write(r);
    } else if (conv_refl->parsed()) {
      const Family f = parse_family(conv_family);
      const ProbVec p = ProbVec::parse(conv_dist);
      const auto schedule = parse_u64_list(conv_schedule, "--n");
      if (schedule.empty()) throw ParseError("--n needs at least one value");
      for (std::uint64_t n : schedule) check_schedule_point(n, p, true);
      const double limit = f == Family::A ? shannon(p) : reflective(p);
      Record prefix;
      prefix["family"] = family_name(f);
      prefix["dist"] = p.to_string();
      emit_converge(w, schedule, prefix, [&](std::uint64_t n) {
        return ConvergePoint{normalized_log_orbit(f, n, p), limit};
      });
    } else if (conv_sp->parsed()) {
      const ProbVec p = ProbVec::parse(conv_dist);
      const auto schedule = parse_u64_list(conv_schedule, "--n");
      if (schedule.empty()) throw ParseError("--n needs at least one value");
      if (conv_q < 2) throw InvalidArgument("--q must be at least 2");
      for (std::uint64_t n : schedule) check_schedule_point(n, p, false);
      const double limit = static_cast<double>(symplectic_entropy(p).to_long_double());
      Record prefix;
      prefix["q"] = conv_q;
      prefix["dist"] = p.to_string();
      emit_converge(w, schedule, prefix, [&](std::uint64_t n) {
        return ConvergePoint{normalized_logq_quotient(n, p, conv_q), limit};
      });
    } else if (chain_cmd->parsed()) {
      if (opt_family->count()) chain.family = chain_family;
      if (opt_n->count()) chain.n = chain_n;
      if (opt_q->count()) chain.q = chain_q;
      return run_chain_check(chain, w, err);
    } else if (verify->parsed()) {
      if (max_rank < 1 || max_rank > oracle::kMaxCensusRank) {
        throw InvalidArgument("--max-rank must be between 1 and " + std::to_string(oracle::kMaxCensusRank));
      }
      OracleRun run(w);
      if (scope == "all" || scope == "words") verify_words(run);
      if (scope == "all" || scope == "reflection") verify_reflection(run, max_rank);
      if (scope == "all" || scope == "symplectic") verify_symplectic(run);
      if (run.failures() != 0) {
        err << "error: " << run.failures() << " oracle comparison(s) failed\n";
        return kIdentityFailure;
      }
    }
    return kOk;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const InvariantViolation& e) {
    err << "error: internal identity check failed: " << e.what() << '\n';
    return kIdentityFailure;
  }
}

}  // namespace orbent::cli
