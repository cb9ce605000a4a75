#pragma once

#include <iosfwd>

#include "sgx/semigroup.hpp"

namespace sgx {

  //! Membership of a semigroup in the classes
  //! local units => weak local units => firm => factorizable,
  //! together with common weak local units (which implies firm).
  struct ClassReport {
    bool local_units;
    bool weak_local_units;
    bool common_weak_local_units;
    bool firm;
    bool factorizable;

    //! The containments between the classes hold for this report.
    bool chain_consistent() const noexcept {
      return (!local_units || weak_local_units) && (!weak_local_units || firm)
             && (!firm || factorizable) && (!common_weak_local_units || firm);
    }

    friend bool operator==(ClassReport const&, ClassReport const&) = default;
  };

  ClassReport classify(FiniteSemigroup const& S);

  //! One line, e.g. "LU:true WLU:true CWLU:false firm:true factorizable:true".
  std::ostream& operator<<(std::ostream& out, ClassReport const& r);

}  // namespace sgx
