#include "sgx/suite.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <functional>
#include <ostream>
#include <sstream>
#include <thread>

#include "sgx/classify.hpp"
#include "sgx/dual_pairs.hpp"
#include "sgx/error.hpp"
#include "sgx/morita.hpp"
#include "sgx/morphisms.hpp"
#include "sgx/rees.hpp"
#include "sgx/tensor.hpp"

namespace sgx {

  char const* to_string(Verdict v) noexcept {
    switch (v) {
      case Verdict::pass:
        return "PASS";
      case Verdict::fail:
        return "FAIL";
      case Verdict::skip:
        return "SKIP";
    }
    return "?";
  }

  namespace {
    struct Outcome {
      Verdict     verdict;
      std::string witness;
    };

    Outcome pass() {
      return {Verdict::pass, ""};
    }
    Outcome skip(std::string why) {
      return {Verdict::skip, std::move(why)};
    }
    Outcome fail(std::string witness) {
      return {Verdict::fail, witness.empty() ? "unspecified" : std::move(witness)};
    }

    template <typename T>
    std::string joined(T const& values) {
      std::ostringstream out;
      bool               first = true;
      for (auto v : values) {
        out << (first ? "" : ",") << v;
        first = false;
      }
      return out.str();
    }

    std::string flags(MorphismQuality const& q) {
      std::ostringstream out;
      out << "ai=" << q.almost_injective << ",surj=" << q.surjective
          << ",idem=" << q.idempotents_lift << ",reg=" << q.regulars_lift;
      return out.str();
    }

    // Strict local isomorphisms along which idempotents lift also lift
    // regular elements.
    bool regular_lifting_consistent(MorphismQuality const& q) {
      return !(q.strict_local_iso && q.idempotents_lift) || q.regulars_lift;
    }

    Outcome class_chain(FiniteSemigroup const& S, SuiteOptions const&) {
      ClassReport const r = classify(S);
      if (r.chain_consistent()) {
        return pass();
      }
      std::ostringstream out;
      out << r;
      return fail(out.str());
    }

    // Least equivalence containing the generating pairs, by repeated
    // composition until nothing changes.
    std::vector<bool> closure_by_fixed_point(RightAct const& A, LeftAct const& B) {
      std::size_t const  m = A.size() * B.size();
      std::vector<bool>  rel(m * m, false);
      for (std::size_t i = 0; i < m; ++i) {
        rel[i * m + i] = true;
      }
      for (Point a = 0; a < A.size(); ++a) {
        for (Element s = 0; s < A.semigroup().order(); ++s) {
          for (Point b = 0; b < B.size(); ++b) {
            std::size_t const x = A.act(a, s) * B.size() + b;
            std::size_t const y = a * B.size() + B.act(s, b);
            rel[x * m + y] = rel[y * m + x] = true;
          }
        }
      }
      for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < m; ++i) {
          for (std::size_t j = 0; j < m; ++j) {
            if (!rel[i * m + j]) {
              continue;
            }
            for (std::size_t k = 0; k < m; ++k) {
              if (rel[j * m + k] && !rel[i * m + k]) {
                rel[i * m + k] = true;
                changed        = true;
              }
            }
          }
        }
      }
      return rel;
    }

    Outcome tensor_soundness(FiniteSemigroup const& S, SuiteOptions const&) {
      RightAct const      A = RightAct::regular(S);
      LeftAct const       B = LeftAct::regular(S);
      TensorProduct const t = tensor_product(A, B);
      std::size_t const   n = S.order();
      for (Point a = 0; a < n; ++a) {
        for (Element s = 0; s < n; ++s) {
          for (Point b = 0; b < n; ++b) {
            if (t.class_of(A.act(a, s), b) != t.class_of(a, B.act(s, b))) {
              return fail("unbalanced a=" + std::to_string(a) + ",s=" + std::to_string(s)
                          + ",b=" + std::to_string(b));
            }
          }
        }
      }
      auto const        rel = closure_by_fixed_point(A, B);
      std::size_t const m   = n * n;
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          PointPair const x{i / n, i % n}, y{j / n, j % n};
          bool const      same = t.class_of(x) == t.class_of(y);
          if (same != rel[i * m + j]) {
            return fail("closure oracle disagrees on (" + std::to_string(x.first) + ","
                        + std::to_string(x.second) + ") vs (" + std::to_string(y.first) + ","
                        + std::to_string(y.second) + ")");
          }
          if (same) {
            auto w   = tossing_witness(t, x, y);
            auto end = w ? replay(*w, A, B) : std::nullopt;
            if (!end || *end != y) {
              return fail("tossing does not replay from (" + std::to_string(x.first) + ","
                          + std::to_string(x.second) + ")");
            }
          }
        }
      }
      return pass();
    }

    Outcome lm_t13(FiniteSemigroup const& S, SuiteOptions const&) {
      if (!is_factorizable(S)) {
        return skip("not factorizable");
      }
      InducedMorphisms const im = context_induced_semigroup_morphisms(canonical_context(S));
      if (im.properties_hold()) {
        return pass();
      }
      return fail("theta:" + flags(im.theta_quality) + ";phi:" + flags(im.phi_quality));
    }

    struct SandwichCase {
      std::size_t          u, v;
      std::vector<Element> p;

      std::string describe() const {
        return "U=" + std::to_string(u) + ",V=" + std::to_string(v) + ",p=" + joined(p);
      }
    };

    std::vector<SandwichCase> sandwich_cases(std::size_t n, std::size_t sample) {
      std::vector<SandwichCase>                            cases;
      std::vector<std::pair<std::size_t, std::size_t>> const shapes{{1, 1}, {1, 2}, {2, 1}, {2, 2}};
      for (auto [u, v] : shapes) {
        auto        all    = all_sandwich_matrices(n, u, v);
        std::size_t stride = 1;
        if (u * v > 1 && all.size() > sample) {
          stride = (all.size() + sample - 1) / sample;
        }
        for (std::size_t i = 0; i < all.size(); i += stride) {
          cases.push_back({u, v, std::move(all[i])});
        }
      }
      return cases;
    }

    Outcome lm_p10(FiniteSemigroup const& S, SuiteOptions const& options) {
      if (!is_factorizable(S)) {
        return skip("not factorizable");
      }
      for (auto const& c : sandwich_cases(S.order(), options.sandwich_sample)) {
        ReesMatrixSemigroup const M(S, c.u, c.v, c.p);
        rees_factorizable(M);
        ReesCover const cover = morita_cover(M);
        if (!cover.properties_hold() || !regular_lifting_consistent(cover.quality)) {
          return fail(c.describe() + ";" + flags(cover.quality));
        }
      }
      return pass();
    }

    Outcome firm_corollary(FiniteSemigroup const& S, SuiteOptions const& options) {
      if (!is_firm(S)) {
        return skip("not firm");
      }
      for (auto const& c : sandwich_cases(S.order(), options.sandwich_sample)) {
        ReesMatrixSemigroup const M(S, c.u, c.v, c.p);
        ReesCover const           cover = morita_cover(M);
        CoverInjectivity const    ci    = cover_injectivity(cover);
        if (!ci.injective || !ci.witnesses_replay || ci.unconnected_pairs != 0
            || cover.morita.semigroup().order() != M.semigroup().order()) {
          return fail(c.describe() + ";morita_order=" + std::to_string(cover.morita.semigroup().order())
                      + ",rees_order=" + std::to_string(M.semigroup().order()));
        }
      }
      return pass();
    }

    Outcome tensor_base(FiniteSemigroup const& S, SuiteOptions const&) {
      if (!is_factorizable(S)) {
        return skip("not factorizable");
      }
      std::size_t const m = tensor_square(S).semigroup().order();
      for (Element p = 0; p < m; ++p) {
        TensorBaseCover const r = tensor_base_cover(S, 1, 1, {p});
        if (!r.square_firm || !r.holds()) {
          return fail("U=1,V=1,p=" + std::to_string(p) + ";square_firm=" + std::to_string(r.square_firm)
                      + ";" + flags(r.cover.quality) + ",inj=" + std::to_string(r.cover.injective));
        }
      }
      return pass();
    }

    bool wlu_dual(Pair const& beta) {
      return has_weak_local_units(beta.semigroup()) && is_dual_pair(beta);
    }

    Outcome hz_sli(FiniteSemigroup const& S, SuiteOptions const&) {
      HotzelMap const h = hotzel_map(Pair::regular(S));
      if (h.properties_hold() && regular_lifting_consistent(h.quality)) {
        return pass();
      }
      return fail(flags(h.quality));
    }

    Outcome hz_24(FiniteSemigroup const& S, SuiteOptions const&) {
      Pair const beta = Pair::regular(S);
      if (!wlu_dual(beta)) {
        return skip("no weak local units or not dual");
      }
      auto const r = verify_sigma_isomorphism(beta);
      if (r.isomorphism) {
        return pass();
      }
      return fail("morita_order=" + std::to_string(r.map.morita.semigroup().order())
                  + ",sigma_order=" + std::to_string(r.map.sigma.elements.size()));
    }

    Outcome hz_25(FiniteSemigroup const& S, SuiteOptions const&) {
      Pair const beta = Pair::regular(S);
      if (!wlu_dual(beta)) {
        return skip("no weak local units or not dual");
      }
      auto const r = verify_sigma_equals_rank_one(beta);
      if (r.equal()) {
        return pass();
      }
      if (!r.complete && r.sigma_in_omega1) {
        return skip("adjoint pairs beyond the candidate limit");
      }
      return fail("sigma=" + std::to_string(r.sigma_size) + ",omega1=" + std::to_string(r.omega1_size)
                  + ",sigma_in_omega1=" + std::to_string(r.sigma_in_omega1)
                  + ",omega1_in_sigma=" + std::to_string(r.omega1_in_sigma));
    }

    Outcome eq31(FiniteSemigroup const& S, SuiteOptions const&) {
      Pair const beta = Pair::regular(S);
      if (sigma(beta).product_rule_holds) {
        return pass();
      }
      // Report the first offending pair of brackets.
      SigmaSemigroup const sg = sigma(beta);
      std::size_t const    n  = S.order();
      for (Point b = 0; b < n; ++b) {
        for (Point a = 0; a < n; ++a) {
          for (Point b2 = 0; b2 < n; ++b2) {
            for (Point a2 = 0; a2 < n; ++a2) {
              if (sg.semigroup(sg.index(b, a, n), sg.index(b2, a2, n))
                  != sg.index(b, S(S(a, b2), a2), n)) {
                return fail("[" + std::to_string(b) + "," + std::to_string(a) + "]["
                            + std::to_string(b2) + "," + std::to_string(a2) + "]");
              }
            }
          }
        }
      }
      return fail("product rule flag inconsistent");
    }

    Outcome kristo_37(FiniteSemigroup const& S, SuiteOptions const&) {
      if (!has_common_weak_local_units(S)) {
        return skip("no common weak local units");
      }
      std::vector<FiniteSemigroup> targets{catalog::trivial()};
      {
        // All labeled semigroups of order 2, by direct check of the 16 tables.
        for (std::size_t code = 0; code < 16; ++code) {
          std::vector<Element> t{code & 1, (code >> 1) & 1, (code >> 2) & 1, (code >> 3) & 1};
          bool                 assoc = true;
          for (Element x = 0; x < 2 && assoc; ++x) {
            for (Element y = 0; y < 2 && assoc; ++y) {
              for (Element z = 0; z < 2 && assoc; ++z) {
                assoc = t[t[x * 2 + y] * 2 + z] == t[x * 2 + t[y * 2 + z]];
              }
            }
          }
          if (assoc) {
            targets.emplace_back(2, std::move(t));
          }
        }
      }
      std::size_t const n = S.order();
      for (std::size_t ti = 0; ti < targets.size(); ++ti) {
        FiniteSemigroup const& T = targets[ti];
        std::vector<Element>   map(n, 0);
        while (true) {
          bool mult = true;
          for (Element x = 0; x < n && mult; ++x) {
            for (Element y = 0; y < n && mult; ++y) {
              mult = map[S(x, y)] == T(map[x], map[y]);
            }
          }
          if (mult) {
            auto const r = check_injectivity_conditions(SemigroupMorphism(S, T, map));
            if (!r.equivalent()) {
              return fail("target=" + instance_descriptor(T) + ";map=" + joined(map) + ";ai="
                          + std::to_string(r.almost_injective) + ",sS="
                          + std::to_string(r.injective_on_right_ideals)
                          + ",Ss=" + std::to_string(r.injective_on_left_ideals));
            }
          }
          std::size_t i = n;
          while (i > 0 && map[i - 1] + 1 == T.order()) {
            map[--i] = 0;
          }
          if (i == 0) {
            break;
          }
          ++map[i - 1];
        }
      }
      return pass();
    }

    Outcome kristo_39(FiniteSemigroup const& S, SuiteOptions const&) {
      RightAct const A = RightAct::regular(S);
      for (auto const& rho : enumerate_endomorphisms(A)) {
        ActSemigroup const as = act_to_semigroup(A, rho);
        if (!as.properties_hold()) {
          return fail("rho=" + joined(rho.map()) + ";" + flags(as.quality));
        }
        if (as.quality.strict_local_iso && has_common_weak_local_units(as.semigroup)) {
          // Back from the morphism to an act: tau(t * s) = tau(t) s.
          RightAct const back = sli_to_act(as.rho);
          for (Element t = 0; t < back.size(); ++t) {
            for (Element s = 0; s < S.order(); ++s) {
              if (as.rho(back.act(t, s)) != S(as.rho(t), s)) {
                return fail("rho=" + joined(rho.map()) + ";action t=" + std::to_string(t)
                            + ",s=" + std::to_string(s));
              }
            }
          }
        }
      }
      return pass();
    }

    Outcome anh_22(FiniteSemigroup const& S, SuiteOptions const&) {
      Pair const beta = Pair::regular(S);
      if (!wlu_dual(beta)) {
        return skip("no weak local units or not dual");
      }
      auto const r = morita_units_check(beta);
      if (r.holds()) {
        return pass();
      }
      return fail("wlu=" + std::to_string(r.weak_local_units) + ",base_lu="
                  + std::to_string(r.base_local_units) + ",lu=" + std::to_string(r.local_units));
    }

    Outcome sme_firm(FiniteSemigroup const& S, SuiteOptions const&) {
      if (!is_firm(S)) {
        return skip("not firm");
      }
      auto const r = verify_firm_equivalence(canonical_context(S));
      if (r.holds()) {
        return pass();
      }
      return fail("theta_iso=" + std::to_string(r.theta_isomorphism) + ",unitary="
                  + std::to_string(r.unitary) + ",surjective=" + std::to_string(r.surjectively_defined));
    }

    using Check = std::function<Outcome(FiniteSemigroup const&, SuiteOptions const&)>;

    struct Theorem {
      TheoremInfo info;
      Check       check;
    };

    std::vector<Theorem> const& theorems() {
      static std::vector<Theorem> const all = {
          {{"class-chain", "LU => WLU => firm => factorizable and CWLU => firm"}, class_chain},
          {{"tensor-soundness",
            "regular tensor square is balanced, minimal, and tossings replay"},
           tensor_soundness},
          {{"LM_T13_g", "canonical context: theta, phi almost injective, lift idempotents"},
           lm_t13},
          {{"LM_P10_g", "Rees cover psi is onto, almost injective, lifts idempotents"}, lm_p10},
          {{"firm-corollary", "Rees cover psi is injective over a firm base"}, firm_corollary},
          {{"tensor-base-cover", "Rees cover over the tensor square is bijective"}, tensor_base},
          {{"Hz_sli", "bracket map from B (x) A is a strict local isomorphism"}, hz_sli},
          {{"Hz_2.4", "bracket map is bijective for dual pairs with weak local units"}, hz_24},
          {{"Hz_2.5", "brackets equal rank-one adjoint pairs for such dual pairs"}, hz_25},
          {{"eq3.1", "[b,a][b',a'] = [b,<a,b'>a']"}, eq31},
          {{"Kristo_P3.7", "three injectivity conditions coincide under CWLU"}, kristo_37},
          {{"Kristo_P3.9", "act to semigroup and back"}, kristo_39},
          {{"Anh_2.2", "B (x) A inherits (weak) local units from a dual pair"}, anh_22},
          {{"sme_firm", "firm S is isomorphic to a unitary surjectively defined Morita semigroup"},
           sme_firm},
      };
      return all;
    }

    Outcome guarded(Check const& check, FiniteSemigroup const& S, SuiteOptions const& options) {
      try {
        return check(S, options);
      } catch (PreconditionFailed const& e) {
        return skip(e.what());
      } catch (std::exception const& e) {
        return fail(std::string("exception: ") + e.what());
      }
    }
  }  // namespace

  std::vector<TheoremInfo> const& theorem_catalog() {
    static std::vector<TheoremInfo> const info = [] {
      std::vector<TheoremInfo> r;
      for (auto const& t : theorems()) {
        r.push_back(t.info);
      }
      return r;
    }();
    return info;
  }

  std::string instance_descriptor(FiniteSemigroup const& S) {
    return std::to_string(S.order()) + ":" + joined(S.table());
  }

  std::uint64_t fnv1a(std::string const& text) noexcept {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : text) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    return h;
  }

  std::vector<VerificationReport> run_theorem_suite(std::vector<FiniteSemigroup> const& corpus,
                                                    std::vector<std::string> const&     ids,
                                                    SuiteOptions const&                 options) {
    std::vector<Theorem const*> selected;
    for (auto const& t : theorems()) {
      if (ids.empty() || std::find(ids.begin(), ids.end(), t.info.id) != ids.end()) {
        selected.push_back(&t);
      }
    }
    for (auto const& id : ids) {
      if (std::none_of(selected.begin(), selected.end(), [&](auto t) { return t->info.id == id; })) {
        throw PreconditionFailed("unknown theorem id '" + id + "'");
      }
    }

    std::size_t const               tasks = selected.size() * corpus.size();
    std::vector<VerificationReport> reports(tasks);
    std::atomic<std::size_t>        next{0};
    auto                            worker = [&] {
      for (std::size_t k = next++; k < tasks; k = next++) {
        Theorem const&         t     = *selected[k / corpus.size()];
        FiniteSemigroup const& S     = corpus[k % corpus.size()];
        auto const             start = std::chrono::steady_clock::now();
        Outcome                o     = guarded(t.check, S, options);
        std::chrono::duration<double, std::milli> const elapsed
            = std::chrono::steady_clock::now() - start;
        reports[k] = {t.info.id, instance_descriptor(S), o.verdict, std::move(o.witness),
                      elapsed.count()};
      }
    };
    unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
    threads          = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(tasks, 1))));
    {
      std::vector<std::jthread> pool;
      for (unsigned i = 1; i < threads; ++i) {
        pool.emplace_back(worker);
      }
      worker();
    }
    return reports;
  }

  std::vector<TheoremTally> tally(std::vector<VerificationReport> const& reports) {
    std::vector<TheoremTally> result;
    for (auto const& r : reports) {
      if (result.empty() || result.back().theorem != r.theorem) {
        result.push_back({r.theorem});
      }
      auto& t = result.back();
      (r.verdict == Verdict::pass ? t.pass : r.verdict == Verdict::fail ? t.fail : t.skip)++;
    }
    return result;
  }

  namespace {
    std::string field(std::string text) {
      if (text.empty()) {
        return "-";
      }
      std::replace_if(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); }, '_');
      return text;
    }
  }  // namespace

  void write_machine_report(std::ostream&                          out,
                            std::string const&                     header,
                            std::vector<VerificationReport> const& reports) {
    out << "format=sgx-report-1\n";
    if (!header.empty()) {
      out << header;
      if (header.back() != '\n') {
        out << '\n';
      }
    }
    for (auto const& r : reports) {
      std::ostringstream hash;
      hash << std::hex;
      hash.width(16);
      hash.fill('0');
      hash << fnv1a(r.instance);
      out << "entry theorem=" << r.theorem << " instance=" << hash.str()
          << " descriptor=" << r.instance << " verdict=" << to_string(r.verdict)
          << " witness=" << field(r.witness) << '\n';
    }
    std::size_t pass = 0, fail = 0, skip = 0;
    for (auto const& t : tally(reports)) {
      out << "tally theorem=" << t.theorem << " pass=" << t.pass << " fail=" << t.fail
          << " skip=" << t.skip << '\n';
      pass += t.pass;
      fail += t.fail;
      skip += t.skip;
    }
    out << "total pass=" << pass << " fail=" << fail << " skip=" << skip << '\n';
  }

}  // namespace sgx
