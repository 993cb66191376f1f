// fibernorm: command-line driver for norm/stretch computations, the
// fibration database, protocol simulations, the eavesdropper and benchmarks.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "fibernorm/analysis.hpp"
#include "fibernorm/fibration_db.hpp"
#include "fibernorm/protocol.hpp"
#include "fibernorm/teichmuller.hpp"

using namespace fibernorm;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitKeyMismatch = 4;

struct Options {
  std::size_t max_letters = Budget{}.max_letters;
  std::uint64_t seed = 0;

  std::string phi = "1,0";
  double tol = 1e-9;
  std::int64_t glen = 1;
  std::int64_t max_a = 1;
  std::string out;
  std::string db;
  std::string file;
  std::uint64_t n = 1;
  std::size_t decoys = 50;
  std::uint64_t nmax = 16;
  double blowup = 2.0;
  std::string transcript;
  std::string report;
  std::vector<std::size_t> lengths;
  bool phi_given = false;

  Budget budget() const { return Budget{max_letters}; }
};

const char* yes_no(bool b) { return b ? "true" : "false"; }

// --db, then $FIBERNORM_DB, then the built-in canonical database.
FibrationDatabase open_db(const Options& o) {
  if (!o.db.empty()) {
    return load(o.db);
  }
  if (const char* env = std::getenv("FIBERNORM_DB"); env != nullptr && *env != '\0') {
    return load(env);
  }
  return builtin_db();
}

// Writes to `path`, or to stdout when empty.
template <typename Write>
void emit(const std::string& path, Write&& write) {
  if (path.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) {
    throw Error("cannot open '" + path + "' for writing");
  }
  write(out);
}

int run_norm(const Options& o) {
  CohomologyClass phi = parse_class(o.phi);
  std::cout << "phi=" << to_string(phi) << '\n'
            << "thurston_norm=" << thurston_norm(phi) << '\n'
            << "primitive=" << yes_no(is_primitive(phi)) << '\n'
            << "fibered=" << yes_no(is_fibered(phi)) << '\n'
            << "in_cone=" << yes_no(in_fibered_cone(phi)) << '\n'
            << "fiber_rank=";
  if (is_fibered(phi)) {
    std::cout << fiber_rank(phi) << '\n';
  } else {
    std::cout << "none\n";
  }
  return 0;
}

int run_stretch(const Options& o) {
  CohomologyClass phi = parse_class(o.phi);
  IntPolynomial p = specialize(canonical_theta(), phi);
  double root = largest_root(p, o.tol);
  std::cout << "phi=" << to_string(phi) << '\n'
            << "polynomial=" << to_coefficient_string(p) << '\n'
            << "display=" << to_display_string(p) << '\n'
            << std::fixed << std::setprecision(6) << "stretch=" << root << '\n'
            << std::setprecision(12) << "stretch_precise=" << root << '\n';
  return 0;
}

int run_keymap(const Options& o) {
  KeymapResult k = keymap(o.glen);
  std::cout << to_string(k.phi) << " D=" << k.denominator << '\n';
  return 0;
}

int run_db_gen(const Options& o) {
  FibrationDatabase db = generate_metadata_db(o.max_a);
  if (o.out.empty()) {
    std::cout << to_json(db).dump(1) << '\n';
  } else {
    save(db, o.out);
    std::cout << "wrote " << db.size() << " entries to " << o.out << '\n';
  }
  return 0;
}

int run_db_show(const Options& o) {
  FibrationDatabase db = load(o.file);
  std::cout << "a,b,rank,stretch,full_data\n";
  for (const auto& e : db.entries()) {
    std::cout << e.phi.a << ',' << e.phi.b << ',' << e.rank << ',' << std::fixed
              << std::setprecision(9) << e.stretch << std::defaultfloat << ','
              << (e.full_data ? 1 : 0) << '\n';
  }
  return 0;
}

void print_keys(const SharedKey& alice, const SharedKey& bob) {
  std::cout << "alice " << key_report(alice).dump() << '\n'
            << "bob " << key_report(bob).dump() << '\n'
            << "keys_match=" << yes_no(alice == bob) << '\n';
}

int run_sim_symmetric(const Options& o) {
  FibrationEntry entry = canonical_entry();
  if (o.phi_given || !o.db.empty()) {
    FibrationDatabase db = open_db(o);
    CohomologyClass phi = parse_class(o.phi);
    const FibrationEntry* found = db.lookup(phi);
    if (found == nullptr) {
      throw DomainError("class " + to_string(phi) + " is not in the database");
    }
    entry = *found;
  }
  SymmetricSession s = symmetric_session(entry, o.n, o.budget());
  if (o.transcript.empty()) {
    std::cout << "transcript " << to_json(s.transcript).dump() << '\n';
  } else {
    transcript_write(s.transcript, o.transcript);
  }
  if (!o.report.empty()) {
    emit(o.report, [&](std::ostream& out) {
      nlohmann::json j{{"scheme", "symmetric"},
                       {"phi", {entry.phi.a, entry.phi.b}},
                       {"alice", key_report(s.alice)},
                       {"bob", key_report(s.bob)}};
      out << j.dump(1) << '\n';
    });
  }
  print_keys(s.alice, s.bob);
  return s.alice == s.bob ? 0 : kExitKeyMismatch;
}

int run_sim_public(const Options& o) {
  FibrationDatabase db = open_db(o);
  PublicSessionOptions opt;
  opt.n = o.n;
  opt.decoy_total = o.decoys;
  opt.seed = o.seed;
  opt.n_max = o.nmax;
  opt.prepare.blowup = o.blowup;
  opt.budget = o.budget();
  PublicSession s = public_session(db, fixed_length_oracle(o.glen), opt);
  if (o.transcript.empty()) {
    std::cout << "transcript " << to_json(s.transcript).dump() << '\n';
  } else {
    transcript_write(s.transcript, o.transcript);
  }
  if (!o.report.empty()) {
    emit(o.report, [&](std::ostream& out) {
      nlohmann::json j{{"scheme", "public"},
                       {"phi", {s.phi.a, s.phi.b}},
                       {"D", s.denominator},
                       {"decoys", s.prepared.decoy_count},
                       {"alice", key_report(s.alice)},
                       {"bob", key_report(s.bob)}};
      out << j.dump(1) << '\n';
    });
  }
  print_keys(s.alice, s.bob);
  return s.alice == s.bob ? 0 : kExitKeyMismatch;
}

int run_attack(const Options& o) {
  Transcript t = transcript_read(o.transcript);
  if (t.scheme != Scheme::Public) {
    throw DomainError("attack needs a public-scheme transcript");
  }
  FibrationDatabase db = open_db(o);
  auto rows = eavesdrop_scan(message_from_transcript(t), db, o.nmax, o.budget());
  emit(o.out, [&](std::ostream& out) { write_scan_csv(out, rows); });
  return 0;
}

int run_bench_distortion(const Options& o) {
  auto report = distortion_report(canonical_entry(), o.nmax, o.budget());
  emit(o.out, [&](std::ostream& out) { write_distortion_csv(out, report); });
  if (report.truncated) {
    std::cerr << "error: reason=budget_exceeded limit=" << o.max_letters << " rows="
              << report.rows.size() << '\n';
    return kExitBudget;
  }
  return 0;
}

int run_bench_membership(const Options& o) {
  auto rows = membership_bench(o.lengths, o.seed);
  emit(o.out, [&](std::ostream& out) { write_membership_csv(out, rows); });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thurston-norm key agreement on the simplest pseudo-Anosov braid"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--max-letters", o.max_letters, "Letter budget for word growth")
      ->capture_default_str();
  app.add_option("--seed", o.seed, "Seed for all randomness")->capture_default_str();

  std::function<int()> action;
  auto bind = [&action](CLI::App* sub, std::function<int()> f) {
    sub->callback([&action, f] { action = f; });
  };
  auto phi_option = [&o](CLI::App* sub) {
    return sub->add_option_function<std::string>(
        "--phi",
        [&o](const std::string& v) {
          o.phi = v;
          o.phi_given = true;
        },
        "Cohomology class a,b");
  };

  auto* norm = app.add_subcommand("norm", "Thurston norm and fibered-cone predicates");
  phi_option(norm)->required();
  bind(norm, [&] { return run_norm(o); });

  auto* stretch = app.add_subcommand("stretch", "Specialized polynomial and stretch factor");
  phi_option(stretch)->required();
  stretch->add_option("--tol", o.tol, "Root tolerance")->capture_default_str();
  bind(stretch, [&] { return run_stretch(o); });

  auto* km = app.add_subcommand("keymap", "Fibered class f(g) for a platform secret length");
  km->add_option("--glen", o.glen, "Normal-form length |g|")->required();
  bind(km, [&] { return run_keymap(o); });

  auto* db = app.add_subcommand("db", "Fibration database");
  db->require_subcommand(1);
  auto* db_gen = db->add_subcommand("gen", "Generate the metadata database");
  db_gen->add_option("--max-a", o.max_a, "Largest value of a")->required();
  db_gen->add_option("--out", o.out, "Output file");
  bind(db_gen, [&] { return run_db_gen(o); });
  auto* db_show = db->add_subcommand("show", "List database entries");
  db_show->add_option("file", o.file, "Database file")->required();
  bind(db_show, [&] { return run_db_show(o); });

  auto* sim = app.add_subcommand("simulate", "Run a key agreement session");
  sim->require_subcommand(1);
  auto* sym = sim->add_subcommand("symmetric", "Symmetric-key scheme");
  sym->add_option("--N", o.n, "Exponent N")->required();
  sym->add_option("--db", o.db, "Database file");
  phi_option(sym);
  sym->add_option("--transcript", o.transcript, "Write the public transcript here");
  sym->add_option("--report", o.report, "Write the private key report here");
  bind(sym, [&] { return run_sim_symmetric(o); });

  auto* pub = sim->add_subcommand("public", "Public-key scheme");
  pub->add_option("--glen", o.glen, "Normal-form length of the shared platform secret")
      ->required();
  pub->add_option("--N", o.n, "Exponent N")->required();
  pub->add_option("--decoys", o.decoys, "Total number of sent elements")->capture_default_str();
  pub->add_option("--seed", o.seed, "Seed")->capture_default_str();
  pub->add_option("--nmax", o.nmax, "Bob's search bound")->capture_default_str();
  pub->add_option("--blowup", o.blowup, "Obfuscation blowup (1 = literal conjugates)")
      ->capture_default_str();
  pub->add_option("--db", o.db, "Database file");
  pub->add_option("--transcript", o.transcript, "Write the public transcript here");
  pub->add_option("--report", o.report, "Write the private key report here");
  bind(pub, [&] { return run_sim_public(o); });

  auto* attack = app.add_subcommand("attack", "Eavesdropper database scan");
  attack->add_option("--transcript", o.transcript, "Public transcript")->required();
  attack->add_option("--db", o.db, "Database file");
  attack->add_option("--nmax", o.nmax, "Search bound per class")->capture_default_str();
  attack->add_option("--out", o.out, "scan.csv output");
  bind(attack, [&] { return run_attack(o); });

  auto* bench = app.add_subcommand("bench", "Benchmarks");
  bench->require_subcommand(1);
  auto* dist = bench->add_subcommand("distortion", "Exact l_max growth against lambda^N");
  dist->add_option("--nmax", o.nmax, "Largest N")->required();
  dist->add_option("--out", o.out, "distortion.csv output");
  bind(dist, [&] { return run_bench_distortion(o); });
  auto* memb = bench->add_subcommand("membership", "Timing of fiber membership checks");
  memb->add_option("--lengths", o.lengths, "Word lengths")->delimiter(',')->required();
  memb->add_option("--out", o.out, "CSV output");
  bind(memb, [&] { return run_bench_membership(o); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: reason=budget_exceeded limit=" << e.limit() << '\n';
    return kExitBudget;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
