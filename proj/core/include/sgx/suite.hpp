#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sgx/semigroup.hpp"

namespace sgx {

  enum class Verdict { pass, fail, skip };

  char const* to_string(Verdict v) noexcept;

  //! One theorem on one corpus member. Failures carry a witness; skips
  //! name the missing hypothesis.
  struct VerificationReport {
    std::string theorem;
    std::string instance;  // descriptor, e.g. "2:0,1,0,1"
    Verdict     verdict;
    std::string witness;
    double      millis;
  };

  struct TheoremInfo {
    std::string id;
    std::string statement;
  };

  //! Every theorem id the suite knows, in run order.
  std::vector<TheoremInfo> const& theorem_catalog();

  struct SuiteOptions {
    //! Sandwich matrices per shape with |U| + |V| > 2; larger sets are
    //! sampled with a fixed stride.
    std::size_t sandwich_sample = 64;
    //! Worker threads; 0 means hardware concurrency.
    unsigned threads = 0;
  };

  //! Runs the selected theorems (all when `ids` is empty) on every member.
  //! Output is ordered by theorem, then by member position, regardless of
  //! thread count. Throws PreconditionFailed for an unknown id.
  std::vector<VerificationReport> run_theorem_suite(std::vector<FiniteSemigroup> const& corpus,
                                                    std::vector<std::string> const&     ids,
                                                    SuiteOptions const& options = {});

  std::string instance_descriptor(FiniteSemigroup const& S);

  //! 64-bit FNV-1a.
  std::uint64_t fnv1a(std::string const& text) noexcept;

  struct TheoremTally {
    std::string theorem;
    std::size_t pass = 0, fail = 0, skip = 0;
  };

  std::vector<TheoremTally> tally(std::vector<VerificationReport> const& reports);

  //! The line-oriented key=value report. Timings are left out so equal
  //! inputs give byte-identical output.
  void write_machine_report(std::ostream&                          out,
                            std::string const&                     header,
                            std::vector<VerificationReport> const& reports);

}  // namespace sgx
