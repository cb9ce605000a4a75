#include "sgx/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "sgx/error.hpp"

namespace sgx {

  namespace {
    class LineReader {
     public:
      LineReader(std::istream& in, std::string source) : _in(in), _source(std::move(source)) {}

      // Next non-blank line, comments stripped; false at end of input.
      bool next() {
        std::string text;
        while (std::getline(_in, text)) {
          ++_line;
          if (auto hash = text.find('#'); hash != std::string::npos) {
            text.erase(hash);
          }
          std::istringstream words(text);
          _tokens.clear();
          for (std::string w; words >> w;) {
            _tokens.push_back(std::move(w));
          }
          if (!_tokens.empty()) {
            return true;
          }
        }
        _tokens.clear();
        return false;
      }

      std::vector<std::string> const& expect(std::string const& what) {
        if (!next()) {
          fail("unexpected end of input, expected " + what);
        }
        return _tokens;
      }

      [[noreturn]] void fail(std::string const& why) const {
        throw ParseError(_source, _line, why);
      }

      std::size_t number(std::string const& token, std::string const& what) const {
        std::size_t value = 0;
        auto const* first = token.data();
        auto const* last  = token.data() + token.size();
        auto [ptr, ec]    = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last) {
          fail("expected a non-negative integer for " + what + ", got '" + token + "'");
        }
        return value;
      }

      // One line of exactly `count` entries, each below `bound`.
      void row(std::size_t count, std::size_t bound, std::string const& what, std::vector<std::size_t>& out) {
        auto const& t = expect(what);
        if (t.size() != count) {
          fail(what + " has " + std::to_string(t.size()) + " entries, expected "
               + std::to_string(count));
        }
        for (auto const& token : t) {
          std::size_t const v = number(token, what);
          if (v >= bound) {
            fail("entry " + token + " is out of range (must be < " + std::to_string(bound) + ")");
          }
          out.push_back(v);
        }
      }

      // Returns the line number of each row.
      std::vector<std::size_t> table(std::size_t rows, std::size_t cols, std::size_t bound,
                                     std::string const& what, std::vector<std::size_t>& out) {
        std::vector<std::size_t> lines;
        for (std::size_t r = 0; r < rows; ++r) {
          row(cols, bound, what + " row " + std::to_string(r), out);
          lines.push_back(_line);
        }
        return lines;
      }

      std::size_t line() const noexcept {
        return _line;
      }

      // Header `keyword n1 ... nk`.
      std::vector<std::size_t> header(std::string const& keyword, std::size_t args) {
        auto const& t = expect("'" + keyword + "' header");
        if (t.front() != keyword) {
          fail("expected '" + keyword + "', got '" + t.front() + "'");
        }
        if (t.size() != args + 1) {
          fail("'" + keyword + "' header takes " + std::to_string(args) + " arguments");
        }
        std::vector<std::size_t> values;
        for (std::size_t i = 1; i < t.size(); ++i) {
          values.push_back(number(t[i], keyword + " size"));
        }
        return values;
      }

      void finish() {
        if (next()) {
          fail("unexpected trailing content '" + _tokens.front() + "'");
        }
      }

      std::vector<std::string> const& tokens() const noexcept {
        return _tokens;
      }

     private:
      std::istream&            _in;
      std::string              _source;
      std::size_t              _line = 0;
      std::vector<std::string> _tokens;
    };

    std::ifstream open(std::filesystem::path const& path) {
      std::ifstream in(path);
      if (!in) {
        throw ParseError(path.string(), 0, "cannot open file");
      }
      return in;
    }

    struct RawAct {
      std::string        source;
      std::size_t        line;
      ActKind            kind;
      std::size_t        size;
      std::vector<Point> left;
      std::vector<Point> right;
    };

    ActKind kind_of(LineReader& r) {
      auto const& t = r.expect("'act' header");
      if (t.front() != "act" || t.size() != 3) {
        r.fail("expected 'act <left|right|bi> <size>'");
      }
      if (t[1] == "left") {
        return ActKind::left;
      }
      if (t[1] == "right") {
        return ActKind::right;
      }
      if (t[1] == "bi") {
        return ActKind::bi;
      }
      r.fail("unknown act kind '" + t[1] + "'");
    }

    RawAct parse_act(std::istream&      in,
                     std::string const& source,
                     ActKind            expected,
                     std::size_t        left_order,
                     std::size_t        right_order) {
      LineReader  r(in, source);
      ActKind const kind = kind_of(r);
      if (kind != expected) {
        r.fail("act kind does not match its use");
      }
      std::size_t const m = r.number(r.tokens()[2], "act size");
      if (m == 0) {
        r.fail("act carrier must be non-empty");
      }
      RawAct raw{source, r.line(), kind, m, {}, {}};
      if (kind != ActKind::right) {
        r.table(left_order, m, m, "left action", raw.left);
      }
      if (kind != ActKind::left) {
        r.table(m, right_order, m, "right action", raw.right);
      }
      r.finish();
      return raw;
    }

    // Validation errors of an act file, reported at its header.
    template <typename Build>
    auto located(RawAct const& raw, Build&& build) {
      try {
        return build();
      } catch (CompatibilityViolation const& e) {
        throw ParseError(raw.source, raw.line, e.what());
      }
    }

    template <typename Table>
    void write_rows(std::ostream& out, Table const& t, std::size_t rows, std::size_t cols) {
      for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
          out << (j == 0 ? "" : " ") << t[i * cols + j];
        }
        out << '\n';
      }
    }

    PairingTable parse_pairing_block(LineReader& r) {
      auto const  dims = r.header("pairing", 2);
      PairingTable p{dims[0], dims[1], {}};
      // Range against S is checked when the pairing is built.
      r.table(p.p_count, p.q_count, static_cast<std::size_t>(-1), "pairing", p.entries);
      return p;
    }
  }  // namespace

  FiniteSemigroup parse_semigroup(std::istream& in, std::string const& source) {
    LineReader        r(in, source);
    std::size_t const n = r.header("semigroup", 1)[0];
    if (n == 0) {
      r.fail("semigroup order must be at least 1");
    }
    std::vector<Element> table;
    auto const           lines = r.table(n, n, n, "semigroup", table);
    r.finish();
    try {
      return FiniteSemigroup(n, std::move(table));
    } catch (AssociativityViolation const& e) {
      throw ParseError(source, lines[e.x], e.what());
    }
  }

  FiniteSemigroup read_semigroup(std::filesystem::path const& path) {
    auto in = open(path);
    return parse_semigroup(in, path.string());
  }

  void write_semigroup(std::ostream& out, FiniteSemigroup const& S) {
    out << "semigroup " << S.order() << '\n';
    write_rows(out, S.table(), S.order(), S.order());
  }

  ActKind read_act_kind(std::filesystem::path const& path) {
    auto       in = open(path);
    LineReader r(in, path.string());
    return kind_of(r);
  }

  RightAct read_right_act(std::filesystem::path const& path, FiniteSemigroup const& S) {
    auto   in  = open(path);
    RawAct raw = parse_act(in, path.string(), ActKind::right, 0, S.order());
    return located(raw, [&] { return RightAct(S, raw.size, std::move(raw.right)); });
  }

  LeftAct read_left_act(std::filesystem::path const& path, FiniteSemigroup const& S) {
    auto   in  = open(path);
    RawAct raw = parse_act(in, path.string(), ActKind::left, S.order(), 0);
    return located(raw, [&] { return LeftAct(S, raw.size, std::move(raw.left)); });
  }

  Biact read_biact(std::filesystem::path const& path,
                   FiniteSemigroup const&       S,
                   FiniteSemigroup const&       T) {
    auto   in  = open(path);
    RawAct raw = parse_act(in, path.string(), ActKind::bi, S.order(), T.order());
    return located(raw, [&] {
      return Biact(LeftAct(S, raw.size, std::move(raw.left)),
                   RightAct(T, raw.size, std::move(raw.right)));
    });
  }

  void write_act(std::ostream& out, RightAct const& A) {
    out << "act right " << A.size() << '\n';
    write_rows(out, A.table(), A.size(), A.semigroup().order());
  }

  void write_act(std::ostream& out, LeftAct const& A) {
    out << "act left " << A.size() << '\n';
    write_rows(out, A.table(), A.semigroup().order(), A.size());
  }

  void write_act(std::ostream& out, Biact const& A) {
    out << "act bi " << A.size() << '\n';
    write_rows(out, A.left().table(), A.left_semigroup().order(), A.size());
    write_rows(out, A.right().table(), A.size(), A.right_semigroup().order());
  }

  std::vector<Element> read_morphism(std::filesystem::path const& path) {
    auto                 in = open(path);
    LineReader           r(in, path.string());
    std::size_t const    n = r.header("morphism", 1)[0];
    std::vector<Element> map;
    while (map.size() < n) {
      for (auto const& token : r.expect("morphism entries")) {
        map.push_back(r.number(token, "morphism entry"));
      }
    }
    if (map.size() != n) {
      r.fail("morphism has " + std::to_string(map.size()) + " entries, expected "
             + std::to_string(n));
    }
    r.finish();
    return map;
  }

  PairingTable read_pairing(std::filesystem::path const& path) {
    auto       in = open(path);
    LineReader r(in, path.string());
    auto       p = parse_pairing_block(r);
    r.finish();
    return p;
  }

  ReesDescriptor read_rees(std::filesystem::path const& path) {
    auto       in = open(path);
    LineReader r(in, path.string());
    auto const dims = r.header("rees", 2);
    if (dims[0] == 0 || dims[1] == 0) {
      r.fail("index sets must be non-empty");
    }
    ReesDescriptor d{dims[0], dims[1], {}};
    r.table(d.v_count, d.u_count, static_cast<std::size_t>(-1), "sandwich", d.sandwich);
    r.finish();
    return d;
  }

  Pair read_pair(std::filesystem::path const& path) {
    auto       in = open(path);
    LineReader r(in, path.string());
    auto const base = path.parent_path();

    auto const& head = r.expect("'pair' header");
    if (head.size() != 1 || head.front() != "pair") {
      r.fail("expected 'pair'");
    }
    auto reference = [&](std::string const& keyword) {
      auto const& t = r.expect("'" + keyword + " <path>'");
      if (t.size() != 2 || t.front() != keyword) {
        r.fail("expected '" + keyword + " <path>'");
      }
      return base / t[1];
    };
    auto const      sgp   = reference("semigroup");
    auto const      left  = reference("left");
    auto const      right = reference("right");
    PairingTable    p     = parse_pairing_block(r);
    std::size_t const pairing_end = r.line();
    r.finish();

    FiniteSemigroup S = read_semigroup(sgp);
    LeftAct         A = read_left_act(left, S);
    RightAct        B = read_right_act(right, S);
    if (p.p_count != A.size() || p.q_count != B.size()) {
      throw ParseError(path.string(), pairing_end, "pairing dimensions do not match the acts");
    }
    return Pair(std::move(A), std::move(B), std::move(p.entries));
  }

}  // namespace sgx
