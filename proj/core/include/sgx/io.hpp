#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "sgx/acts.hpp"
#include "sgx/dual_pairs.hpp"
#include "sgx/semigroup.hpp"

namespace sgx {

  // Text formats. Blank lines and anything after '#' are ignored; every
  // other line must have exactly the expected number of entries. Errors
  // are ParseError("<source>:<line>: <reason>").
  //
  //   semigroup <n>            then n rows of n entries
  //   act right <m>            then m rows of |S| entries, a.s
  //   act left <m>             then |S| rows of m entries, s.a
  //   act bi <m>               the left table, then the right table
  //   morphism <n>             then n entries (any layout)
  //   pairing <|P|> <|Q|>      then |P| rows of |Q| entries
  //   rees <|U|> <|V|>         then |V| rows of |U| entries p(v, u)
  //   pair                     then the lines `semigroup <path>`,
  //                            `left <path>`, `right <path>` and a
  //                            pairing block; paths are relative to the
  //                            descriptor

  FiniteSemigroup parse_semigroup(std::istream& in, std::string const& source);
  FiniteSemigroup read_semigroup(std::filesystem::path const& path);
  void            write_semigroup(std::ostream& out, FiniteSemigroup const& S);

  enum class ActKind { left, right, bi };

  //! The kind named in the header of an act file.
  ActKind read_act_kind(std::filesystem::path const& path);

  RightAct read_right_act(std::filesystem::path const& path, FiniteSemigroup const& S);
  LeftAct  read_left_act(std::filesystem::path const& path, FiniteSemigroup const& S);
  //! S acts on the left, T on the right.
  Biact read_biact(std::filesystem::path const& path,
                   FiniteSemigroup const&       S,
                   FiniteSemigroup const&       T);

  void write_act(std::ostream& out, RightAct const& A);
  void write_act(std::ostream& out, LeftAct const& A);
  void write_act(std::ostream& out, Biact const& A);

  std::vector<Element> read_morphism(std::filesystem::path const& path);

  struct PairingTable {
    std::size_t          p_count;
    std::size_t          q_count;
    std::vector<Element> entries;  // entries[p * q_count + q]
  };

  PairingTable read_pairing(std::filesystem::path const& path);

  struct ReesDescriptor {
    std::size_t          u_count;
    std::size_t          v_count;
    std::vector<Element> sandwich;  // sandwich[v * u_count + u]
  };

  ReesDescriptor read_rees(std::filesystem::path const& path);

  //! Validates the result as a Pair; construction errors propagate.
  Pair read_pair(std::filesystem::path const& path);

}  // namespace sgx
