#pragma once

#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "srpl/classifier.hpp"

namespace srpl {

using json = nlohmann::json;

/// Bad input text: malformed JSON, unknown example name, bad field.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Complexes and ideals

inline json to_json(const SimplicialComplex& c) {
  json j;
  j["n"] = c.ambient_size();
  j["facets"] = json::array();
  if (c.is_void()) {
    j["kind"] = "void";
  } else if (c.is_empty_complex()) {
    j["kind"] = "empty";
  } else {
    for (Face f : c.facets()) j["facets"].push_back(face_labels(f));
  }
  return j;
}

inline json to_json(const MonomialIdeal& I) {
  json j;
  j["n"] = I.ambient_size();
  j["gens"] = I.generators();  // already lex sorted
  return j;
}

namespace detail {

inline int read_n(const json& j) {
  if (!j.contains("n") || !j["n"].is_number_integer()) throw ParseError("missing integer field \"n\"");
  const int n = j["n"].get<int>();
  if (n < 0 || n > kMaxAmbient)
    throw ParseError("\"n\" must be in 0.." + std::to_string(kMaxAmbient));
  return n;
}

template <typename F>
auto rethrow_as_parse_error(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  } catch (const std::out_of_range& e) {
    throw ParseError(e.what());
  }
}

}  // namespace detail

inline SimplicialComplex complex_from_json(const json& j) {
  return detail::rethrow_as_parse_error([&] {
    const int n = detail::read_n(j);
    if (!j.contains("facets") || !j["facets"].is_array()) throw ParseError("missing array field \"facets\"");
    const auto sets = j["facets"].get<std::vector<std::vector<int>>>();
    if (j.contains("kind")) {
      const auto kind = j["kind"].get<std::string>();
      if (!sets.empty()) throw ParseError("\"kind\" is only allowed with an empty facet list");
      if (kind == "void") return SimplicialComplex::void_complex(n);
      if (kind == "empty") return SimplicialComplex::empty(n);
      throw ParseError("unknown complex kind \"" + kind + "\"");
    }
    if (sets.empty()) throw ParseError("empty facet list needs \"kind\": \"empty\" or \"void\"");
    return SimplicialComplex::from_label_sets(n, sets);
  });
}

inline MonomialIdeal ideal_from_json(const json& j) {
  return detail::rethrow_as_parse_error([&] {
    const int n = detail::read_n(j);
    if (!j.contains("gens") || !j["gens"].is_array()) throw ParseError("missing array field \"gens\"");
    return MonomialIdeal::from_generators(n, j["gens"].get<std::vector<Exponents>>());
  });
}

// ---------------------------------------------------------------------------
// Reports

inline json to_json(const DepthReport& r, const Field& field) {
  json j;
  j["depth"] = r.depth;
  j["dim"] = r.dim;
  j["is_cm"] = r.is_cm;
  j["field"] = field.name();
  j["witnesses"] = json::array();
  for (const auto& w : r.witnesses)
    j["witnesses"].push_back({{"index", w.index}, {"degree", w.degree}, {"dimension", w.dimension}});
  return j;
}

inline DepthReport depth_report_from_json(const json& j) {
  return detail::rethrow_as_parse_error([&] {
    DepthReport r;
    r.depth = j.at("depth").get<int>();
    r.dim = j.at("dim").get<int>();
    r.is_cm = j.at("is_cm").get<bool>();
    for (const auto& w : j.at("witnesses"))
      r.witnesses.push_back({w.at("index").get<int>(), w.at("degree").get<Exponents>(),
                             w.at("dimension").get<std::size_t>()});
    return r;
  });
}

inline bool operator==(const Witness& a, const Witness& b) {
  return a.index == b.index && a.degree == b.degree && a.dimension == b.dimension;
}
inline bool operator==(const DepthReport& a, const DepthReport& b) {
  return a.depth == b.depth && a.dim == b.dim && a.is_cm == b.is_cm && a.witnesses == b.witnesses;
}

inline json to_json(const ClassificationReport& r) {
  json j;
  j["verdict"] = to_string(r.verdict);
  j["theorem"] = r.theorem;
  j["witness"] = r.witness;
  j["notes"] = r.notes;
  j["oracle"] = {{"ran", r.oracle.ran}, {"seconds", r.oracle.seconds}};
  j["oracle"]["result"] = r.oracle.result ? json(*r.oracle.result) : json(nullptr);
  return j;
}

inline Verdict verdict_from_string(const std::string& s) {
  if (s == "holds") return Verdict::holds;
  if (s == "fails") return Verdict::fails;
  if (s == "oracle_only") return Verdict::oracle_only;
  throw ParseError("unknown verdict \"" + s + "\"");
}

inline ClassificationReport report_from_json(const json& j) {
  return detail::rethrow_as_parse_error([&] {
    ClassificationReport r;
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    r.theorem = j.at("theorem").get<std::string>();
    r.witness = j.at("witness").get<std::string>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    const auto& o = j.at("oracle");
    r.oracle.ran = o.at("ran").get<bool>();
    r.oracle.seconds = o.at("seconds").get<double>();
    if (!o.at("result").is_null()) r.oracle.result = o.at("result").get<bool>();
    return r;
  });
}

inline bool operator==(const OracleSection& a, const OracleSection& b) {
  return a.ran == b.ran && a.result == b.result && a.seconds == b.seconds;
}
inline bool operator==(const ClassificationReport& a, const ClassificationReport& b) {
  return a.verdict == b.verdict && a.theorem == b.theorem && a.witness == b.witness &&
         a.notes == b.notes && a.oracle == b.oracle;
}

// ---------------------------------------------------------------------------
// Named examples

inline SimplicialComplex five_cycle() { return cycle(5); }

/// Four triangles of the boundary of a tetrahedron on 1..4 plus the triangle 345.
inline SimplicialComplex example_buchsbaum_square() {
  return SimplicialComplex::from_label_sets(5, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {3, 4, 5}});
}

/// Three 4-sets on 1..6 whose dual complex is a matroid although the complex is
/// not a disjoint union of uniform matroids.
inline SimplicialComplex example_three_blocks() {
  return SimplicialComplex::from_label_sets(6, {{1, 2, 3, 4}, {1, 2, 5, 6}, {3, 4, 5, 6}});
}

namespace detail {

class NamedParser {
 public:
  explicit NamedParser(std::string_view text) : text_(text) {}

  SimplicialComplex parse() {
    if (text_.empty()) fail("empty input");
    auto c = sum();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return c;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("named example, position " + std::to_string(pos_ + 1) + ": " + msg);
  }

  SimplicialComplex sum() {
    auto c = product();
    while (pos_ < text_.size() && text_[pos_] == '+') {
      ++pos_;
      c = disjoint_union(c, product());
    }
    return c;
  }

  SimplicialComplex product() {
    auto c = atom();
    while (pos_ < text_.size() && text_[pos_] == '*') {
      ++pos_;
      c = join_disjoint(c, atom());
    }
    return c;
  }

  int number() {
    if (pos_ >= text_.size() || text_[pos_] != ':') fail("expected ':'");
    ++pos_;
    int value = 0;
    const char* begin = text_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(begin, text_.data() + text_.size(), value);
    if (ec != std::errc{} || ptr == begin) fail("expected a number");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  SimplicialComplex atom() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-'))
      ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    if (name.empty()) fail("expected an example name");
    try {
      if (name == "five-cycle") return five_cycle();
      if (name == "example-4-10" || name == "buchsbaum-square") return example_buchsbaum_square();
      if (name == "example-5-4" || name == "three-blocks") return example_three_blocks();
      if (name == "uniform") {
        const int n = number();
        const int r = number();
        return uniform_matroid(n, r);
      }
      if (name == "cycle") return cycle(number());
      if (name == "path") return path(number());
      if (name == "complete") return complete_graph(number());
      if (name == "simplex") return simplex(number());
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      fail(e.what());
    }
    pos_ = start;
    fail("unknown example \"" + name + "\"");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// five-cycle, example-4-10 (buchsbaum-square), example-5-4 (three-blocks), uniform:n:r, cycle:k, path:k,
/// complete:k, simplex:k; A*B joins and A+B takes disjoint unions, with
/// B relabeled after A. '*' binds tighter than '+'.
inline SimplicialComplex parse_named(std::string_view text) { return detail::NamedParser(text).parse(); }

/// A complex or an ideal read from JSON text, a JSON file, or a named example.
struct Input {
  std::optional<SimplicialComplex> complex;
  std::optional<MonomialIdeal> ideal;
};

inline Input parse_json_input(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!j.is_object()) throw ParseError("expected a JSON object");
  Input in;
  if (j.contains("facets")) in.complex = complex_from_json(j);
  else if (j.contains("gens")) in.ideal = ideal_from_json(j);
  else throw ParseError("JSON object has neither \"facets\" nor \"gens\"");
  return in;
}

inline Input parse_input(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return parse_json_input(arg);
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream file(arg);
    if (!file) throw ParseError("cannot read " + arg);
    std::stringstream ss;
    ss << file.rdbuf();
    try {
      return parse_json_input(ss.str());
    } catch (const ParseError& e) {
      throw ParseError(arg + ": " + e.what());
    }
  }
  return Input{parse_named(arg), std::nullopt};
}

/// The complex an input talks about; a squarefree ideal is read as I_Δ.
inline SimplicialComplex input_complex(const Input& in) {
  if (in.complex) return *in.complex;
  if (!in.ideal->is_squarefree() || in.ideal->is_unit())
    throw ParseError("input ideal is not a proper squarefree ideal, so it has no Stanley-Reisner complex");
  return complex_of_radical(*in.ideal);
}

/// The ideal an input talks about; a complex stands for I_Δ.
inline MonomialIdeal input_ideal(const Input& in) {
  if (in.ideal) return *in.ideal;
  return sr_ideal(*in.complex);
}

}  // namespace srpl
