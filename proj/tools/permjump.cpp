#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zigzag/decode.hpp"
#include "zigzag/dsl.hpp"
#include "zigzag/engine.hpp"
#include "zigzag/tame.hpp"
#include "zigzag/verify.hpp"

using nlohmann::json;
using namespace zigzag;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitStalled = 2;
constexpr int kExitAmbiguous = 3;
constexpr int kExitMismatch = 4;

json decode_object(const std::string& kind, const Permutation& p) {
  if (kind == "bits") return perm_to_bits(p).str();
  if (kind == "tree") return tree_str(perm_to_tree(p));
  if (kind == "dyck") return tree_to_dyck(perm_to_tree(p)).word;
  return perm_to_setpart(p).str();
}

std::string decode_text(const std::string& kind, const Permutation& p) {
  return decode_object(kind, p).get<std::string>();
}

// The decoders only cover their own languages; refuse early when the
// requested language is larger.
void check_decoder_domain(const std::string& kind, const LanguageOracle& oracle,
                          int n) {
  if (n > 8) return;  // full-scan guard
  for (const auto& p : enumerate_language(oracle, n)) {
    try {
      decode_text(kind, p);
    } catch (const error&) {
      throw error("language member " + p.str() + " has no " + kind + " decoding");
    }
  }
}

struct GenOptions {
  std::string pattern;
  int n = 0;
  std::string mode = "ordered";
  std::string seed;
  std::string decode;
  std::string format = "lines";
  bool annotate = false;
  bool force = false;
};

void emit_line(const GenOptions& opt, long long index, const Permutation& p,
               const std::optional<JumpStep>& j) {
  if (opt.format == "jsonl") {
    json rec;
    rec["index"] = index;
    rec["perm"] = p.entries();
    if (j)
      rec["jump"] = {{"value", j->value},
                     {"dir", j->dir == Direction::Left ? "L" : "R"},
                     {"steps", j->steps}};
    else
      rec["jump"] = nullptr;
    rec["object"] = opt.decode.empty() ? json(nullptr) : decode_object(opt.decode, p);
    std::cout << rec.dump() << "\n";
    return;
  }
  if (opt.annotate && j) std::cout << "jump " << j->str() << "\n";
  std::cout << p.str();
  if (!opt.decode.empty()) std::cout << "  " << decode_text(opt.decode, p);
  std::cout << "\n";
}

int run_gen(const GenOptions& opt) {
  DslExpr expr = parse_dsl(opt.pattern);
  PatternFormula formula = compile(expr);
  FormulaOracle oracle(formula, opt.n);

  if (!opt.decode.empty()) check_decoder_domain(opt.decode, oracle, opt.n);

  if (opt.mode == "ordered") {
    if (!opt.force) {
      const TameReport rep = check_formula(formula);
      if (rep.verdict != Verdict::Tame)
        throw error("pattern is not certified tame; use --force to generate anyway\n" +
                    rep.str());
    }
    OrderedGenerator gen(oracle, opt.n);
    long long index = 0;
    while (auto p = gen.next()) emit_line(opt, index++, *p, gen.last_jump());
    return kExitOk;
  }

  const Permutation seed =
      opt.seed.empty() ? Permutation::identity(opt.n) : Permutation::parse(opt.seed);
  const GenResult res = generate_greedy(oracle, opt.n, seed);
  std::optional<JumpStep> prev;
  for (size_t i = 0; i < res.sequence.size(); ++i) {
    prev = i ? jump_between(res.sequence[i - 1], res.sequence[i]) : std::nullopt;
    emit_line(opt, static_cast<long long>(i), res.sequence[i], prev);
  }
  switch (res.status) {
    case GenStatus::Complete: return kExitOk;
    case GenStatus::StalledNoJump:
      std::cerr << "stalled after " << res.visited_count << " permutations\n";
      return kExitStalled;
    case GenStatus::StalledAmbiguous:
      std::cerr << "ambiguous jump direction after " << res.visited_count
                << " permutations\n";
      return kExitAmbiguous;
  }
  return kExitOk;
}

int run_count(const std::string& pattern, const std::string& range,
              const std::string& method) {
  int lo = 1, hi = 0;
  if (const auto dots = range.find(".."); dots != std::string::npos) {
    lo = std::stoi(range.substr(0, dots));
    hi = std::stoi(range.substr(dots + 2));
  } else {
    lo = hi = std::stoi(range);
  }
  if (lo < 0 || hi < lo) throw error("bad length range: " + range);

  PatternFormula formula = compile(parse_dsl(pattern));
  bool mismatch = false;
  std::cout << "n\t" << (method == "both" ? "brute\tgen" : method) << "\n";
  for (int n = lo; n <= hi; ++n) {
    std::cout << n;
    long long brute = -1, gen = -1;
    if (method == "brute" || method == "both") {
      brute = static_cast<long long>(brute_enumerate(formula, n).size());
      std::cout << "\t" << brute;
    }
    if (method == "gen" || method == "both") {
      FormulaOracle oracle(formula, n);
      gen = static_cast<long long>(generate_ordered(oracle, n).size());
      std::cout << "\t" << gen;
    }
    if (method == "both" && brute != gen) {
      mismatch = true;
      std::cout << "\tMISMATCH";
    }
    std::cout << "\n";
  }
  return mismatch ? kExitMismatch : kExitOk;
}

int run_check(const std::string& what, const std::string& pattern, int n) {
  DslExpr expr = parse_dsl(pattern);
  PatternFormula formula = compile(expr);
  if (what == "tame") {
    std::cout << check_formula(formula).str() << "\n";
    return kExitOk;
  }
  if (what == "cyclic") {
    FormulaOracle oracle(formula, n);
    std::cout << (is_cyclic(oracle, n) ? "cyclic" : "not cyclic") << "\n";
    return kExitOk;
  }
  const CheckResult res =
      what == "zigzag" ? is_zigzag(formula, n) : is_hereditary(formula, n);
  if (res.ok) {
    std::cout << "true\n";
  } else {
    std::cout << "false";
    if (res.witness) std::cout << "  witness: " << res.witness->str();
    std::cout << "  (" << res.detail << ")\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gray-code generation of pattern-avoiding permutations"};
  app.require_subcommand(1);

  GenOptions gen_opt;
  auto* gen = app.add_subcommand("gen", "generate a language in Gray-code order");
  gen->add_option("--pattern", gen_opt.pattern, "pattern expression")->required();
  gen->add_option("-n", gen_opt.n, "permutation length")->required();
  gen->add_option("--mode", gen_opt.mode)->check(CLI::IsMember({"ordered", "greedy"}));
  gen->add_option("--seed", gen_opt.seed, "start permutation (greedy mode)");
  gen->add_option("--decode", gen_opt.decode)
      ->check(CLI::IsMember({"bits", "tree", "dyck", "setpart"}));
  gen->add_option("--format", gen_opt.format)->check(CLI::IsMember({"lines", "jsonl"}));
  gen->add_flag("--annotate", gen_opt.annotate, "print the jump between lines");
  gen->add_flag("--force", gen_opt.force, "skip the tameness gate");

  std::string count_pattern, count_range = "1..6", count_method = "both";
  auto* count = app.add_subcommand("count", "count language members per length");
  count->add_option("--pattern", count_pattern)->required();
  count->add_option("--n", count_range, "length or range like 1..8");
  count->add_option("--method", count_method)
      ->check(CLI::IsMember({"brute", "gen", "both"}));

  std::string check_what, check_pattern;
  int check_n = 6;
  auto* check = app.add_subcommand("check", "run a structural check");
  check->add_option("what", check_what, "tame|zigzag|hereditary|cyclic")
      ->required()
      ->check(CLI::IsMember({"tame", "zigzag", "hereditary", "cyclic"}));
  check->add_option("--pattern", check_pattern)->required();
  check->add_option("-n", check_n, "verification length");

  std::string tr_op, tr_pattern;
  auto* tr = app.add_subcommand("transform", "apply a symmetry to an expression");
  tr->add_option("--op", tr_op)->required()
      ->check(CLI::IsMember({"rev", "cpl", "inv", "rot"}));
  tr->add_option("--pattern", tr_pattern)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitUsage : kExitOk;
  }

  try {
    if (gen->parsed()) return run_gen(gen_opt);
    if (count->parsed()) return run_count(count_pattern, count_range, count_method);
    if (check->parsed()) return run_check(check_what, check_pattern, check_n);
    if (tr->parsed()) {
      const Transform op = tr_op == "rev" ? Transform::Rev
                         : tr_op == "cpl" ? Transform::Cpl
                         : tr_op == "inv" ? Transform::Inv
                                          : Transform::Rot;
      std::cout << emit_dsl(transform_expr(op, resolve_transforms(parse_dsl(tr_pattern))))
                << "\n";
      return kExitOk;
    }
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
