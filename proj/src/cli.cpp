#include "trisect/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <set>

#include "trisect/json_io.hpp"

#ifndef TRISECT_DATA_DIR
#define TRISECT_DATA_DIR "data"
#endif

namespace trisect::cli {

namespace fs = std::filesystem;
namespace io = trisect::json;
using nlohmann::json;

namespace {

const std::set<std::string> kStockNames{"S4", "S1xS3", "CP2", "CP2bar", "S2xS2"};

fs::path fixture_dir() {
  if (const char* env = std::getenv("TRISECT_FIXTURES"); env && *env) return env;
  return fs::path(TRISECT_DATA_DIR) / "fixtures";
}

// Paths that do not exist as given are looked up in the fixture directory.
fs::path resolve(const std::string& arg) {
  const fs::path p(arg);
  if (fs::exists(p)) return p;
  const fs::path dir = fixture_dir();
  for (const fs::path& c : {dir / p, dir / p.filename()})
    if (fs::exists(c)) return c;
  fail(ErrorKind::InvalidInput, "no such file: " + arg);
}

json read_json(const std::string& arg) {
  const fs::path path = resolve(arg);
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidInput, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::InvalidInput, path.string() + ": malformed JSON");
  }
}

TrisectionDiagram load_diagram(const std::string& arg) {
  if (kStockNames.count(arg)) return standard_diagram(arg);
  return io::diagram_from_json(read_json(arg));
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

Pi1Class pi1_class_from(const std::string& s) {
  if (s == "trivial") return Pi1Class::Trivial;
  if (s == "infinite-cyclic") return Pi1Class::InfiniteCyclic;
  if (s == "other") return Pi1Class::Other;
  return Pi1Class::Unknown;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homological toolkit for trisection diagrams and Kirby-Thompson bounds", "trisect"};
  app.require_subcommand(1);

  std::string file, loop_file;

  auto* validate_cmd = app.add_subcommand("validate", "Check a diagram; exit 0 if valid, 2 if not");
  validate_cmd->add_option("diagram", file, "Diagram JSON file")->required();

  auto* homology_cmd = app.add_subcommand("homology", "H_1 of the trisected manifold");
  homology_cmd->add_option("diagram", file, "Diagram JSON file")->required();

  auto* kirby_cmd = app.add_subcommand("kirby", "Kirby skeleton: dotted circles and linking matrix");
  kirby_cmd->add_option("diagram", file, "Diagram JSON file")->required();

  auto* loop_cmd = app.add_subcommand("loop", "Validate a loop in the cut complex and report lengths");
  loop_cmd->add_option("diagram", file, "Diagram JSON file")->required();
  loop_cmd->add_option("loop", loop_file, "Loop JSON file")->required();

  std::string p_text;
  bool not_gsc = false, no_summand = false;
  std::string pi1_class = "unknown";
  auto* bound_cmd = app.add_subcommand("bound", "Lower bounds on the Kirby-Thompson invariant");
  bound_cmd->add_option("--p", p_text, "Order of H_1 (at least 2)")->required();
  bound_cmd->add_flag("--not-gsc", not_gsc, "X is known not to be geometrically simply connected");
  bound_cmd->add_flag("--no-summand", no_summand, "X has no S1xS3 summand");
  bound_cmd->add_option("--pi1", pi1_class, "trivial | infinite-cyclic | other | unknown")
      ->check(CLI::IsMember({"trivial", "infinite-cyclic", "other", "unknown"}));

  std::size_t walk_g = 5, walk_m = 8, trials = 10000;
  std::uint64_t seed = 1;
  auto* walk_cmd = app.add_subcommand("walk", "Random type-0 walks checked against the entry bounds");
  walk_cmd->add_option("--g", walk_g, "Maximum genus")->check(CLI::PositiveNumber);
  walk_cmd->add_option("--m", walk_m, "Maximum walk length");
  walk_cmd->add_option("--trials", trials, "Number of trials");
  walk_cmd->add_option("--seed", seed, "Seed; trial t uses seed + t");

  std::string gen_name, gen_stab, gen_zero, gen_out;
  std::vector<std::string> gen_sum, gen_spun;
  int gen_which = 1;
  auto* gen_cmd = app.add_subcommand("gen", "Generate diagrams and zero-length loops");
  auto* o_name = gen_cmd->add_option("--name", gen_name, "Stock diagram")
                     ->check(CLI::IsMember(kStockNames));
  auto* o_sum = gen_cmd->add_option("--sum", gen_sum, "Connected sum of two diagrams (names or files)")
                    ->expected(2);
  auto* o_stab = gen_cmd->add_option("--stabilize", gen_stab, "Stabilize a diagram (name or file)");
  gen_cmd->add_option("--which", gen_which, "Pair to stabilize: 1, 2 or 3")->check(CLI::Range(1, 3));
  auto* o_spun = gen_cmd->add_option("--spun", gen_spun, "Spun lens space S(L(p,q)): p q")->expected(2);
  auto* o_zero = gen_cmd->add_option("--zero-loop", gen_zero, "Zero-length loop of a diagram");
  gen_cmd->add_option("--out", gen_out, "Write the result here instead of stdout");
  o_name->excludes(o_sum, o_stab, o_spun, o_zero);
  o_sum->excludes(o_stab, o_spun, o_zero);
  o_stab->excludes(o_spun, o_zero);
  o_spun->excludes(o_zero);

  if (!args.empty() && !args.front().starts_with('-') && !app.get_subcommand_no_throw(args.front())) {
    err << "trisect: unknown subcommand '" << args.front() << "'\n";
    return kExitInvalid;
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    if (const auto nl = msg.find('\n'); nl != std::string::npos) msg.resize(nl);
    err << "trisect: " << msg << '\n';
    return kExitInvalid;
  }

  try {
    if (validate_cmd->parsed()) {
      const ValidationReport r = validate(load_diagram(file));
      emit(out, io::to_json(r));
      if (!r.ok()) {
        err << "trisect: diagram is not valid\n";
        return kExitFail;
      }
      return kExitPass;
    }
    if (homology_cmd->parsed()) {
      const TrisectionDiagram d = load_diagram(file);
      const Cokernel surface = surface_homology(d);
      Cokernel h = surface;
      std::string method = "surface";
      if (d.annotation(Pair::AlphaBeta)) {
        h = skeleton_homology(build_skeleton(d));
        method = "skeleton";
      }
      json j = io::to_json(h);
      j["method"] = method;
      if (h.free_rank > 0) {
        j["order"] = nullptr;
      } else {
        Integer order = 1;
        for (const Integer& t : h.torsion) order *= t;
        j["order"] = io::to_json(order);
      }
      const bool agree = surface.free_rank == h.free_rank && surface.torsion == h.torsion;
      j["routes_agree"] = agree;
      emit(out, j);
      if (!agree) {
        err << "trisect: skeleton and surface homology disagree\n";
        return kExitFail;
      }
      return kExitPass;
    }
    if (kirby_cmd->parsed()) {
      const KirbySkeleton sk = build_skeleton(load_diagram(file));
      json j = io::to_json(sk);
      j["pi1"] = io::to_json(pi1_from_skeleton(sk));
      emit(out, j);
      return kExitPass;
    }
    if (loop_cmd->parsed()) {
      const TrisectionDiagram d = load_diagram(file);
      const LoopSpec loop = io::loop_from_json(read_json(loop_file), d.genus());
      try {
        emit(out, io::to_json(validate_loop(d, loop)));
        return kExitPass;
      } catch (const LoopError& e) {
        emit(out, {{"ok", false},
                   {"error", std::string(to_string(e.kind()))},
                   {"where", e.where()},
                   {"message", e.what()}});
        err << "trisect: " << e.what() << '\n';
        return kExitFail;
      }
    }
    if (bound_cmd->parsed()) {
      json j = io::to_json(theorem3_bound(parse_integer(p_text)));
      j["L_lower_from_pi1"] = theorem12_bound(not_gsc, no_summand, pi1_class_from(pi1_class));
      emit(out, j);
      return kExitPass;
    }
    if (walk_cmd->parsed()) {
      const HarnessSummary s = run_entry_bound_harness(walk_g, walk_m, trials, seed);
      emit(out, io::to_json(s));
      if (!s.ok()) {
        err << "trisect: " << s.failing_trials.size() << " trials violate the entry bounds\n";
        return kExitFail;
      }
      return kExitPass;
    }
    if (gen_cmd->parsed()) {
      json j;
      if (!gen_name.empty()) {
        j = io::to_json(standard_diagram(gen_name));
      } else if (!gen_sum.empty()) {
        j = io::to_json(connected_sum(load_diagram(gen_sum[0]), load_diagram(gen_sum[1])));
      } else if (!gen_stab.empty()) {
        j = io::to_json(stabilize(load_diagram(gen_stab), gen_which));
      } else if (!gen_spun.empty()) {
        j = io::to_json(spun_lens(parse_integer(gen_spun[0]), parse_integer(gen_spun[1])));
      } else if (!gen_zero.empty()) {
        j = io::to_json(zero_length_loop(load_diagram(gen_zero)));
      } else {
        err << "trisect: gen needs one of --name, --sum, --stabilize, --spun, --zero-loop\n";
        return kExitInvalid;
      }
      if (gen_out.empty()) {
        emit(out, j);
      } else {
        std::ofstream f(gen_out);
        if (!f) fail(ErrorKind::InvalidInput, "cannot write " + gen_out);
        f << j.dump(2) << '\n';
        emit(out, {{"written", gen_out}});
      }
      return kExitPass;
    }
  } catch (const Error& e) {
    err << "trisect: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return kExitInvalid;
  } catch (const json::exception& e) {
    err << "trisect: bad JSON: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace trisect::cli
