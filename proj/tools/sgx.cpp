// sgx: command-line front end for the finite semigroup toolkit.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sgx/classify.hpp"
#include "sgx/corpus.hpp"
#include "sgx/dual_pairs.hpp"
#include "sgx/error.hpp"
#include "sgx/io.hpp"
#include "sgx/morita.hpp"
#include "sgx/rees.hpp"
#include "sgx/suite.hpp"
#include "sgx/tensor.hpp"

namespace fs = std::filesystem;
using namespace sgx;

namespace {

  constexpr int exit_failures = 1;
  constexpr int exit_input    = 2;

  struct ReportSink {
    std::string path = "sgx-report.txt";
    bool        off  = false;

    void add(CLI::App* cmd) {
      cmd->add_option("--report", path, "machine-readable report path")->capture_default_str();
      cmd->add_flag("--no-report", off, "do not write a report file");
    }

    void write(std::string const& header, std::vector<VerificationReport> const& entries) const {
      if (off) {
        return;
      }
      std::ofstream out(path, std::ios::binary);
      if (!out) {
        throw Error("cannot write report to " + path);
      }
      write_machine_report(out, header, entries);
    }
  };

  std::string yes_no(bool b) {
    return b ? "true" : "false";
  }

  std::string quality_line(MorphismQuality const& q) {
    std::ostringstream out;
    out << "almost_injective:" << yes_no(q.almost_injective) << " surjective:" << yes_no(q.surjective)
        << " strict_local_iso:" << yes_no(q.strict_local_iso)
        << " idempotents_lift:" << yes_no(q.idempotents_lift)
        << " regulars_lift:" << yes_no(q.regulars_lift);
    return out.str();
  }

  std::string quality_keys(std::string const& prefix, MorphismQuality const& q) {
    std::ostringstream out;
    out << prefix << "almost_injective=" << yes_no(q.almost_injective) << '\n'
        << prefix << "surjective=" << yes_no(q.surjective) << '\n'
        << prefix << "strict_local_iso=" << yes_no(q.strict_local_iso) << '\n'
        << prefix << "idempotents_lift=" << yes_no(q.idempotents_lift) << '\n'
        << prefix << "regulars_lift=" << yes_no(q.regulars_lift) << '\n';
    return out.str();
  }

  void print_table(std::ostream& out, FiniteSemigroup const& S) {
    for (Element x = 0; x < S.order(); ++x) {
      out << "  ";
      for (Element y = 0; y < S.order(); ++y) {
        out << (y == 0 ? "" : " ") << S(x, y);
      }
      out << '\n';
    }
  }

  VerificationReport entry(std::string theorem, std::string instance, bool ok, std::string witness) {
    return {std::move(theorem), std::move(instance), ok ? Verdict::pass : Verdict::fail,
            ok ? "" : std::move(witness), 0.0};
  }

  VerificationReport skipped(std::string theorem, std::string instance, std::string why) {
    return {std::move(theorem), std::move(instance), Verdict::skip, std::move(why), 0.0};
  }

  int exit_code(std::vector<VerificationReport> const& entries) {
    for (auto const& e : entries) {
      if (e.verdict == Verdict::fail) {
        return exit_failures;
      }
    }
    return 0;
  }

  int run_classify(fs::path const& file, ReportSink const& sink) {
    FiniteSemigroup const S = read_semigroup(file);
    ClassReport const     r = classify(S);
    std::cout << file.string() << " (order " << S.order() << ")\n" << r << '\n';

    std::ostringstream h;
    h << "command=classify\ninput=" << file.string() << "\norder=" << S.order()
      << "\nlocal_units=" << yes_no(r.local_units) << "\nweak_local_units=" << yes_no(r.weak_local_units)
      << "\ncommon_weak_local_units=" << yes_no(r.common_weak_local_units)
      << "\nfirm=" << yes_no(r.firm) << "\nfactorizable=" << yes_no(r.factorizable) << '\n';
    std::ostringstream w;
    w << r;
    std::vector<VerificationReport> entries{
        entry("class-chain", instance_descriptor(S), r.chain_consistent(), w.str())};
    sink.write(h.str(), entries);
    return exit_code(entries);
  }

  int run_tensor(fs::path const&    a_file,
                 fs::path const&    b_file,
                 fs::path const&    s_file,
                 std::string const& outer_file,
                 ReportSink const&  sink) {
    FiniteSemigroup const S = read_semigroup(s_file);
    FiniteSemigroup const T = outer_file.empty() ? S : read_semigroup(outer_file);
    ActKind const         ka = read_act_kind(a_file);
    ActKind const         kb = read_act_kind(b_file);
    if (ka == ActKind::left || kb == ActKind::right) {
      throw PreconditionFailed("first act must be right (or bi), second act left (or bi)");
    }
    TensorProduct t = [&] {
      if (ka == ActKind::bi && kb == ActKind::bi) {
        return tensor_product(read_biact(a_file, T, S), read_biact(b_file, S, T));
      }
      if (ka == ActKind::bi) {
        return tensor_product(read_biact(a_file, T, S), read_left_act(b_file, S));
      }
      if (kb == ActKind::bi) {
        return tensor_product(read_right_act(a_file, S), read_biact(b_file, S, T));
      }
      return tensor_product(read_right_act(a_file, S), read_left_act(b_file, S));
    }();

    std::ostringstream h;
    h << "command=tensor\nleft_input=" << a_file.string() << "\nright_input=" << b_file.string()
      << "\nclasses=" << t.num_classes() << '\n';
    std::cout << "tensor product: " << t.num_classes() << " classes over " << t.first().size()
              << " x " << t.second().size() << " pairs\n";
    for (std::size_t c = 0; c < t.num_classes(); ++c) {
      std::ostringstream members;
      bool               first = true;
      for (auto [a, b] : t.members(c)) {
        members << (first ? "" : " ") << "(" << a << "," << b << ")";
        first = false;
      }
      std::cout << "  class " << c << ": " << members.str() << '\n';
      std::string m = members.str();
      std::replace(m.begin(), m.end(), ' ', ';');
      h << "class_" << c << "=" << m << '\n';
    }
    bool sound = true;
    for (Point a = 0; a < t.first().size(); ++a) {
      for (Element s = 0; s < S.order(); ++s) {
        for (Point b = 0; b < t.second().size(); ++b) {
          sound = sound && t.class_of(t.first().act(a, s), b) == t.class_of(a, t.second().act(s, b));
        }
      }
    }
    std::vector<VerificationReport> entries{
        entry("tensor-soundness", a_file.string() + "|" + b_file.string(), sound, "unbalanced class")};
    sink.write(h.str(), entries);
    return exit_code(entries);
  }

  int run_morita_build(fs::path const&   p_file,
                       fs::path const&   q_file,
                       fs::path const&   pairing_file,
                       fs::path const&   s_file,
                       ReportSink const& sink) {
    FiniteSemigroup const S       = read_semigroup(s_file);
    LeftAct               P       = read_left_act(p_file, S);
    RightAct              Q       = read_right_act(q_file, S);
    PairingTable          pairing = read_pairing(pairing_file);
    if (pairing.p_count != P.size() || pairing.q_count != Q.size()) {
      throw ParseError(pairing_file.string(), 1, "pairing dimensions do not match the acts");
    }
    MoritaSemigroup const M = build_morita_semigroup(std::move(P), std::move(Q), std::move(pairing.entries));
    ClassReport const     r = classify(M.semigroup());
    std::cout << "Morita semigroup Q (x) P: order " << M.semigroup().order()
              << "\n  unitary:" << yes_no(M.unitary())
              << " surjectively_defined:" << yes_no(M.surjectively_defined()) << "\n  " << r << '\n';
    print_table(std::cout, M.semigroup());

    std::ostringstream h;
    h << "command=morita-build\norder=" << M.semigroup().order() << "\nunitary=" << yes_no(M.unitary())
      << "\nsurjectively_defined=" << yes_no(M.surjectively_defined())
      << "\ntable=" << instance_descriptor(M.semigroup()) << '\n';
    std::vector<VerificationReport> entries;
    sink.write(h.str(), entries);
    return 0;
  }

  int run_rees_cover(fs::path const& s_file, fs::path const& rees_file, ReportSink const& sink) {
    FiniteSemigroup const     S = read_semigroup(s_file);
    ReesDescriptor            d = read_rees(rees_file);
    ReesMatrixSemigroup const M(S, d.u_count, d.v_count, d.sandwich);
    bool const                fact = rees_factorizable(M);
    std::string const         inst = instance_descriptor(M.semigroup());
    std::cout << "Rees matrix semigroup: order " << M.semigroup().order() << " (|U|=" << d.u_count
              << ", |V|=" << d.v_count << ")\n  factorizable:" << yes_no(fact) << '\n';

    std::ostringstream h;
    h << "command=rees-cover\norder=" << M.semigroup().order() << "\nrees_factorizable=" << yes_no(fact)
      << '\n';
    std::vector<VerificationReport> entries;
    if (!is_factorizable(S)) {
      std::cout << "  no cover: base semigroup is not factorizable\n";
      h << "cover=absent\n";
      entries.push_back(skipped("LM_P10_g", inst, "base not factorizable"));
    } else {
      ReesCover const        cover = morita_cover(M);
      CoverInjectivity const ci    = cover_injectivity(cover);
      bool const             firm  = is_firm(S);
      std::cout << "  cover Q (x) P: order " << cover.morita.semigroup().order()
                << "\n  psi: " << quality_line(cover.quality) << "\n  injective:" << yes_no(ci.injective)
                << "\n  tossing witnesses: " << ci.witnesses.size()
                << (ci.witnesses_replay ? " (all replay)" : " (replay FAILED)") << '\n';
      h << "cover_order=" << cover.morita.semigroup().order() << '\n'
        << quality_keys("psi_", cover.quality) << "injective=" << yes_no(ci.injective) << '\n'
        << "tossing_witnesses=" << ci.witnesses.size() << '\n';
      entries.push_back(entry("LM_P10_g", inst, cover.properties_hold(), quality_line(cover.quality)));
      if (firm) {
        entries.push_back(entry("firm-corollary", inst,
                                ci.injective && ci.witnesses_replay && ci.unconnected_pairs == 0,
                                "psi not injective"));
      } else {
        entries.push_back(skipped("firm-corollary", inst, "base not firm"));
      }
    }
    sink.write(h.str(), entries);
    return exit_code(entries);
  }

  int run_dual_check(fs::path const& pair_file, ReportSink const& sink) {
    Pair const          beta = read_pair(pair_file);
    DualityReport const dr   = duality(beta);
    std::string const   inst = pair_file.string();
    std::cout << "pair over S of order " << beta.semigroup().order() << ": |A|=" << beta.A().size()
              << " |B|=" << beta.B().size() << "\n  dual:" << yes_no(dr.dual()) << '\n';
    std::ostringstream h;
    h << "command=dual-check\ninput=" << inst << "\ndual=" << yes_no(dr.dual()) << '\n';
    auto witnesses = [&](char const* name, auto const& ws) {
      std::cout << "  " << name << " witnesses:";
      h << name << "_witnesses=";
      for (std::size_t i = 0; i < ws.size(); ++i) {
        std::string const w = ws[i] ? std::to_string(*ws[i]) : "none";
        std::cout << ' ' << i << "->" << w;
        h << (i == 0 ? "" : ",") << w;
      }
      std::cout << '\n';
      h << '\n';
    };
    witnesses("a", dr.a_witness);
    witnesses("b", dr.b_witness);

    HotzelMap const h_map = hotzel_map(beta);
    std::cout << "  sigma: order " << h_map.sigma.elements.size()
              << "\n  B (x) A: order " << h_map.morita.semigroup().order()
              << "\n  bracket map: " << quality_line(h_map.quality) << " injective:" << yes_no(h_map.injective)
              << '\n';
    h << "sigma_order=" << h_map.sigma.elements.size() << "\nmorita_order=" << h_map.morita.semigroup().order()
      << '\n'
      << quality_keys("bracket_map_", h_map.quality) << "bracket_map_injective=" << yes_no(h_map.injective)
      << '\n';

    std::vector<VerificationReport> entries;
    entries.push_back(entry("Hz_sli", inst, h_map.properties_hold(), quality_line(h_map.quality)));
    entries.push_back(entry("eq3.1", inst, h_map.sigma.product_rule_holds, "bracket product rule"));
    if (has_weak_local_units(beta.semigroup()) && dr.dual()) {
      auto const iso   = verify_sigma_isomorphism(beta);
      auto const rank  = verify_sigma_equals_rank_one(beta);
      auto const units = morita_units_check(beta);
      std::cout << "  bracket map bijective:" << yes_no(iso.isomorphism)
                << "\n  sigma = rank-one pairs:" << (rank.complete ? yes_no(rank.equal()) : "unknown (limit)")
                << " (|sigma|=" << rank.sigma_size << ", |rank-one|=" << rank.omega1_size << ")"
                << "\n  B (x) A weak local units:" << yes_no(units.weak_local_units)
                << " local units:" << yes_no(units.local_units) << '\n';
      entries.push_back(entry("Hz_2.4", inst, iso.isomorphism, "bracket map not bijective"));
      if (rank.complete) {
        entries.push_back(entry("Hz_2.5", inst, rank.equal(), "sigma differs from rank-one pairs"));
      } else {
        entries.push_back(rank.sigma_in_omega1
                              ? skipped("Hz_2.5", inst, "adjoint pairs beyond the candidate limit")
                              : entry("Hz_2.5", inst, false, "bracket not of rank one"));
      }
      entries.push_back(entry("Anh_2.2", inst, units.holds(), "missing units in B (x) A"));
    } else {
      for (char const* id : {"Hz_2.4", "Hz_2.5", "Anh_2.2"}) {
        entries.push_back(skipped(id, inst, "no weak local units or not dual"));
      }
    }
    sink.write(h.str(), entries);
    return exit_code(entries);
  }

  std::vector<std::string> split_list(std::string const& list) {
    std::vector<std::string> out;
    std::stringstream        in(list);
    for (std::string item; std::getline(in, item, ',');) {
      if (!item.empty()) {
        out.push_back(item);
      }
    }
    return out;
  }

  int run_verify(std::size_t        order,
                 std::string const& theorems,
                 bool               dedup,
                 bool               allow4,
                 SuiteOptions const& options,
                 ReportSink const&  sink) {
    auto const corpus  = semigroups_up_to(order, dedup ? Dedup::isomorphism : Dedup::labeled, allow4);
    auto const ids     = split_list(theorems);
    auto const start   = std::chrono::steady_clock::now();
    auto const reports = run_theorem_suite(corpus, ids, options);
    std::chrono::duration<double> const elapsed = std::chrono::steady_clock::now() - start;

    std::cout << "corpus: orders 1.." << order << ", " << (dedup ? "up to isomorphism" : "labeled") << ", "
              << corpus.size() << " semigroups\n";
    std::size_t fails = 0;
    for (auto const& t : tally(reports)) {
      std::cout << "  " << std::left << std::setw(18) << t.theorem << " pass " << std::setw(5) << t.pass
                << " fail " << std::setw(4) << t.fail << " skip " << t.skip << '\n';
      fails += t.fail;
    }
    for (auto const& r : reports) {
      if (r.verdict == Verdict::fail) {
        std::cout << "  FAIL " << r.theorem << " on " << r.instance << ": " << r.witness << '\n';
      }
    }
    std::cout << (fails == 0 ? "all checks passed" : std::to_string(fails) + " failures") << " in "
              << std::fixed << std::setprecision(2) << elapsed.count() << " s\n";

    std::ostringstream h;
    h << "command=verify\norder=" << order << "\nmode=" << (dedup ? "isomorphism" : "labeled")
      << "\ntheorems=" << (ids.empty() ? "all" : theorems) << "\nsandwich_sample=" << options.sandwich_sample
      << "\nmembers=" << corpus.size() << '\n';
    sink.write(h.str(), reports);
    return exit_code(reports);
  }

  int run_gen_corpus(std::size_t order, bool dedup, bool allow4, fs::path const& dir, ReportSink const& sink) {
    Corpus const c = enumerate_semigroups(order, dedup ? Dedup::isomorphism : Dedup::labeled, allow4);
    fs::create_directories(dir);
    std::size_t const width = std::to_string(c.members.size()).size();
    std::ostringstream h;
    h << "command=gen-corpus\norder=" << order << "\nmode=" << (dedup ? "isomorphism" : "labeled")
      << "\ncount=" << c.members.size() << '\n';
    for (std::size_t i = 0; i < c.members.size(); ++i) {
      std::ostringstream name;
      name << "sgp-" << order << "-" << std::setw(static_cast<int>(width)) << std::setfill('0') << i << ".sgp";
      std::ofstream out(dir / name.str());
      if (!out) {
        throw Error("cannot write " + (dir / name.str()).string());
      }
      write_semigroup(out, c.members[i]);
      h << "file=" << name.str() << " descriptor=" << instance_descriptor(c.members[i]) << '\n';
    }
    std::cout << "wrote " << c.members.size() << " semigroups of order " << order << " to " << dir.string()
              << '\n';
    sink.write(h.str(), {});
    return 0;
  }

  int run_counterexample(std::string const& predicate, std::size_t order, bool allow4, ReportSink const& sink) {
    auto const found = find_counterexample(predicate, order, allow4);
    std::ostringstream h;
    h << "command=counterexample\npredicate=" << predicate << "\norder=" << order << '\n';
    if (found) {
      std::cout << predicate << ": found at order " << found->order() << '\n';
      write_semigroup(std::cout, *found);
      std::cout << classify(*found) << '\n';
      h << "result=found\ndescriptor=" << instance_descriptor(*found) << '\n';
    } else {
      std::cout << predicate << ": absent up to order " << order << '\n';
      h << "result=absent\n";
    }
    sink.write(h.str(), {});
    return 0;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sgx: finite semigroups, acts, tensor products and Morita constructions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "sgx 0.1.0");

  ReportSink sink;

  std::string file, file2, file3, sgp, outer, predicate, theorems, out_dir = "corpus";
  std::size_t order   = 3;
  bool        dedup   = false;
  bool        allow4  = false;
  SuiteOptions options;

  auto* classify_cmd = app.add_subcommand("classify", "semigroup class membership");
  classify_cmd->add_option("semigroup", file, "semigroup file")->required()->check(CLI::ExistingFile);

  auto* tensor_cmd = app.add_subcommand("tensor", "tensor product A (x)_S B");
  tensor_cmd->add_option("actA", file, "right act (or biact) file")->required()->check(CLI::ExistingFile);
  tensor_cmd->add_option("actB", file2, "left act (or biact) file")->required()->check(CLI::ExistingFile);
  tensor_cmd->add_option("-s,--semigroup", sgp, "semigroup S")->required()->check(CLI::ExistingFile);
  tensor_cmd->add_option("--outer", outer, "semigroup of the outer biact actions (default S)")
      ->check(CLI::ExistingFile);

  auto* morita_cmd = app.add_subcommand("morita-build", "Morita semigroup Q (x)_S P from a pairing");
  morita_cmd->add_option("P", file, "left act file")->required()->check(CLI::ExistingFile);
  morita_cmd->add_option("Q", file2, "right act file")->required()->check(CLI::ExistingFile);
  morita_cmd->add_option("pairing", file3, "pairing file")->required()->check(CLI::ExistingFile);
  morita_cmd->add_option("-s,--semigroup", sgp, "semigroup S")->required()->check(CLI::ExistingFile);

  auto* rees_cmd = app.add_subcommand("rees-cover", "Rees matrix semigroup and its Morita cover");
  rees_cmd->add_option("semigroup", file, "base semigroup file")->required()->check(CLI::ExistingFile);
  rees_cmd->add_option("rees", file2, "Rees descriptor file")->required()->check(CLI::ExistingFile);

  auto* dual_cmd = app.add_subcommand("dual-check", "pair duality, brackets and the bracket map");
  dual_cmd->add_option("pair", file, "pair descriptor file")->required()->check(CLI::ExistingFile);

  auto* verify_cmd = app.add_subcommand("verify", "run the theorem suite over a corpus");
  verify_cmd->add_option("--order", order, "largest order in the corpus")->check(CLI::Range(1, 4))
      ->capture_default_str();
  verify_cmd->add_option("--theorems", theorems, "comma-separated theorem ids (default all)");
  verify_cmd->add_option("--threads", options.threads, "worker threads (0 = all cores)");
  verify_cmd->add_option("--sample", options.sandwich_sample, "sandwich matrices per larger shape")
      ->capture_default_str();
  verify_cmd->add_flag("--dedup", dedup, "one member per isomorphism class");
  verify_cmd->add_flag("--allow-order4", allow4, "permit order 4");
  verify_cmd->footer([] {
    std::string text = "Theorem ids:\n";
    for (auto const& t : theorem_catalog()) {
      text += "  " + t.id + "  " + t.statement + "\n";
    }
    return text;
  }());

  auto* gen_cmd = app.add_subcommand("gen-corpus", "write every semigroup of one order");
  gen_cmd->add_option("--order", order, "order")->required()->check(CLI::Range(1, 4));
  gen_cmd->add_flag("--dedup", dedup, "one member per isomorphism class");
  gen_cmd->add_flag("--allow-order4", allow4, "permit order 4");
  gen_cmd->add_option("--out", out_dir, "output directory")->capture_default_str();

  auto* cx_cmd = app.add_subcommand("counterexample", "least semigroup satisfying a predicate");
  cx_cmd->add_option("predicate", predicate, "predicate name")->required();
  cx_cmd->add_option("--order", order, "largest order searched")->required()->check(CLI::Range(1, 4));
  cx_cmd->add_flag("--allow-order4", allow4, "permit order 4");
  cx_cmd->footer([] {
    std::string text = "Predicates:\n";
    for (auto const& p : counterexample_predicates()) {
      text += "  " + p.name + "  " + p.description + "\n";
    }
    return text;
  }());

  for (auto* cmd : {classify_cmd, tensor_cmd, morita_cmd, rees_cmd, dual_cmd, verify_cmd, gen_cmd, cx_cmd}) {
    sink.add(cmd);
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : exit_input;
  }

  try {
    if (*classify_cmd) {
      return run_classify(file, sink);
    }
    if (*tensor_cmd) {
      return run_tensor(file, file2, sgp, outer, sink);
    }
    if (*morita_cmd) {
      return run_morita_build(file, file2, file3, sgp, sink);
    }
    if (*rees_cmd) {
      return run_rees_cover(file, file2, sink);
    }
    if (*dual_cmd) {
      return run_dual_check(file, sink);
    }
    if (*verify_cmd) {
      return run_verify(order, theorems, dedup, allow4, options, sink);
    }
    if (*gen_cmd) {
      return run_gen_corpus(order, dedup, allow4, out_dir, sink);
    }
    if (*cx_cmd) {
      return run_counterexample(predicate, order, allow4, sink);
    }
  } catch (sgx::Error const& e) {
    std::cerr << "sgx: error: " << e.what() << '\n';
    return exit_input;
  } catch (std::exception const& e) {
    std::cerr << "sgx: error: " << e.what() << '\n';
    return exit_input;
  }
  return exit_input;
}
