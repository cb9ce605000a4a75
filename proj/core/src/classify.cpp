#include "sgx/classify.hpp"

#include <ostream>

#include "sgx/tensor.hpp"

namespace sgx {

  ClassReport classify(FiniteSemigroup const& S) {
    return ClassReport{has_local_units(S),
                       has_weak_local_units(S),
                       has_common_weak_local_units(S),
                       is_firm(S),
                       is_factorizable(S)};
  }

  std::ostream& operator<<(std::ostream& out, ClassReport const& r) {
    auto b = [](bool v) { return v ? "true" : "false"; };
    return out << "LU:" << b(r.local_units) << " WLU:" << b(r.weak_local_units)
               << " CWLU:" << b(r.common_weak_local_units) << " firm:" << b(r.firm)
               << " factorizable:" << b(r.factorizable);
  }

}  // namespace sgx
