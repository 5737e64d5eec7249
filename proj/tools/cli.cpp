#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "render.hpp"
#include "tileforge/birkhoff.hpp"
#include "tileforge/coding.hpp"
#include "tileforge/error.hpp"
#include "tileforge/generation.hpp"
#include "tileforge/grid.hpp"
#include "tileforge/oracle.hpp"
#include "tileforge/thurston.hpp"
#include "tileforge/tiling.hpp"

namespace tileforge::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string domain;
  std::string word;
  bool has_word = false;
  std::string lo;
  std::string hi;
  std::vector<std::string> constraints;
  std::string constraints_file;
  std::string format;
  bool count_only = false;
  long limit = -1;
  bool heights = false;
  std::string numbering;
  std::string tiling;
};

// Shorthand domain: rect:MxN or hex:AxBxC.
struct Shape {
  enum { None, Rect, Hex } kind = None;
  int a = 0, b = 0, c = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Shape parse_shape(const std::string& spec) {
  static const std::regex rect(R"(rect:(\d+)x(\d+))");
  static const std::regex hex(R"(hex:(\d+)x(\d+)x(\d+))");
  std::smatch m;
  Shape s;
  auto num = [](const std::string& digits) {
    if (digits.size() > 6) throw Error(ErrorCode::InvalidSize, "dimension too large");
    return std::stoi(digits);
  };
  if (std::regex_match(spec, m, rect)) {
    s = {Shape::Rect, num(m[1]), num(m[2]), 0};
  } else if (std::regex_match(spec, m, hex)) {
    s = {Shape::Hex, num(m[1]), num(m[2]), num(m[3])};
  } else if (spec.rfind("rect:", 0) == 0 || spec.rfind("hex:", 0) == 0) {
    throw Error(ErrorCode::ParseError, "malformed domain spec '" + spec + "'");
  }
  return s;
}

Domain load_domain(const std::string& spec) {
  const Shape s = parse_shape(spec);
  if (s.kind == Shape::Rect) return make_rect(s.a, s.b);
  if (s.kind == Shape::Hex) return make_hexagon(s.a, s.b, s.c);
  return parse_domain(read_file(spec));
}

Numbering load_numbering(const Domain& d, const Options& o) {
  if (o.numbering.empty()) return Numbering::canonical(d);
  return Numbering::from_json(d, read_file(o.numbering));
}

Word word_option(const std::string& text, const char* name) {
  try {
    return Word::parse(text);
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, std::string(name) + ": " + e.what());
  }
}

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  std::string list;
  for (const char* a : allowed) list += (list.empty() ? "" : "|") + std::string(a);
  throw Error(ErrorCode::UnsupportedFormat, "format '" + format + "' not one of " + list);
}

std::string format_or(const Options& o, const char* fallback) { return o.format.empty() ? fallback : o.format; }

void emit_tiling(std::ostream& out, const Tiling& t, const Codec& codec, const Options& o) {
  const std::string format = format_or(o, "json");
  check_format(format, {"json", "words", "ascii", "svg"});
  if (format == "json") {
    out << (o.heights ? heights_to_json(height_from_tiling(t)) : tiling_to_json(t)) << '\n';
  } else if (format == "words") {
    out << codec.encode(t).to_string() << '\n';
  } else if (format == "ascii") {
    out << render_ascii(t);
  } else {
    out << render_svg(t, o.heights);
  }
}

// Streams words in one of the enumeration formats; returns the number written.
class WordStream {
 public:
  WordStream(std::ostream& out, const Codec& codec, std::string format, long limit)
      : out_(out), codec_(codec), format_(std::move(format)), limit_(limit) {
    check_format(format_, {"words", "jsonl", "count"});
  }

  // false once the limit is reached.
  bool operator()(const Word& w) {
    if (limit_ >= 0 && count_ >= static_cast<std::uint64_t>(limit_)) return false;
    ++count_;
    if (format_ == "words") {
      out_ << w.to_string() << '\n';
    } else if (format_ == "jsonl") {
      json line;
      line["word"] = w.to_string();
      line["tiling"] = json::parse(tiling_to_json(codec_.decode(w)));
      out_ << line.dump() << '\n';
    }
    return limit_ < 0 || count_ < static_cast<std::uint64_t>(limit_);
  }

  void finish() {
    if (format_ == "count") out_ << count_ << '\n';
  }

 private:
  std::ostream& out_;
  const Codec& codec_;
  std::string format_;
  long limit_;
  std::uint64_t count_ = 0;
};

std::string stream_format(const Options& o) { return o.count_only ? "count" : format_or(o, "words"); }

// x,y=k
std::pair<Vertex, int> parse_constraint(const std::string& text) {
  static const std::regex re(R"(\s*(-?\d+)\s*,\s*(-?\d+)\s*=\s*(-?\d+)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw Error(ErrorCode::ParseError, "constraint '" + text + "' is not x,y=k");
  return {{std::stoi(m[1]), std::stoi(m[2])}, std::stoi(m[3])};
}

ConstraintSet raw_constraints(const Codec& codec, const Options& o) {
  std::vector<std::pair<Vertex, int>> levels;
  for (const auto& c : o.constraints) levels.push_back(parse_constraint(c));
  if (!o.constraints_file.empty()) {
    json doc;
    try {
      doc = json::parse(read_file(o.constraints_file));
      for (const auto& item : doc.at("constraints")) {
        levels.push_back({{item.at(0).get<int>(), item.at(1).get<int>()}, item.at(2).get<int>()});
      }
    } catch (const json::exception& e) {
      throw Error(ErrorCode::ParseError, std::string("constraint file: ") + e.what());
    }
  }
  const Domain& d = codec.domain();
  ConstraintSet raw;
  for (const auto& [v, k] : levels) {
    const auto id = d.find_vertex(v);
    if (!id || !d.is_interior(*id)) {
      throw Error(ErrorCode::InvalidHeight,
                  "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ") is not an interior vertex");
    }
    const int position = codec.numbering().position_of(*id);
    if (k < 0 || k > codec.max_levels()[position]) {
      throw Error(ErrorCode::Infeasible, "level " + std::to_string(k) + " outside 0.." +
                                             std::to_string(codec.max_levels()[position]));
    }
    const int h = codec.min_heights()[*id] + d.lambda() * k;
    const auto [it, fresh] = raw.emplace(v, h);
    if (!fresh && it->second != h) throw Error(ErrorCode::Infeasible, "vertex constrained twice");
  }
  return raw;
}

Tiling input_tiling(const Codec& codec, const Options& o) {
  if (!o.tiling.empty()) return tiling_from_json(codec.domain(), read_file(o.tiling));
  if (o.has_word) return codec.decode(word_option(o.word, "--word"));
  return minimal_tiling(codec.domain());
}

int cmd_check(const Options& o, std::ostream& out) {
  const Domain d = load_domain(o.domain);
  try {
    (void)minimal_tiling(d);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Untileable) throw;
    out << "untileable\n";
    return kNoSolution;
  }
  out << "tileable\n";
  return kOk;
}

int cmd_extreme(const Options& o, std::ostream& out, bool maximal) {
  const Codec codec(load_numbering(load_domain(o.domain), o));
  emit_tiling(out, maximal ? maximal_tiling(codec.domain()) : minimal_tiling(codec.domain()), codec, o);
  return kOk;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const Codec codec(load_numbering(load_domain(o.domain), o));
  emit_tiling(out, constrained_minimal(codec.domain(), raw_constraints(codec, o)), codec, o);
  return kOk;
}

int cmd_encode(const Options& o, std::ostream& out) {
  if (o.tiling.empty()) throw Error(ErrorCode::ParseError, "encode needs --tiling FILE");
  const Codec codec(load_numbering(load_domain(o.domain), o));
  out << codec.encode(tiling_from_json(codec.domain(), read_file(o.tiling))).to_string() << '\n';
  return kOk;
}

int cmd_decode(const Options& o, std::ostream& out) {
  if (!o.has_word) throw Error(ErrorCode::ParseError, "decode needs --word W");
  const Codec codec(load_numbering(load_domain(o.domain), o));
  emit_tiling(out, codec.decode(word_option(o.word, "--word")), codec, o);
  return kOk;
}

int cmd_succ(const Options& o, std::ostream& out) {
  if (!o.has_word) throw Error(ErrorCode::ParseError, "succ needs --word W");
  const Numbering numbering = load_numbering(load_domain(o.domain), o);
  const auto next = successor(numbering, word_option(o.word, "--word"));
  if (!next) {
    out << "at-maximum\n";
    return kNoSolution;
  }
  out << next->to_string() << '\n';
  return kOk;
}

int cmd_enum(const Options& o, std::ostream& out) {
  const Numbering numbering = load_numbering(load_domain(o.domain), o);
  const std::string format = stream_format(o);
  if (format == "count" && o.limit < 0) {
    out << count_tilings(numbering) << '\n';
    return kOk;
  }
  GenerationSession session(numbering);
  WordStream stream(out, session.codec(), format, o.limit);
  while (stream(session.word()) && session.advance()) {
  }
  stream.finish();
  return kOk;
}

int cmd_interval(const Options& o, std::ostream& out) {
  if (o.lo.empty() && o.hi.empty()) throw Error(ErrorCode::ParseError, "interval needs --lo W --hi W");
  const Numbering numbering = load_numbering(load_domain(o.domain), o);
  const Codec codec(numbering);
  WordStream stream(out, codec, stream_format(o), o.limit);
  enumerate_interval(numbering, word_option(o.lo, "--lo"), word_option(o.hi, "--hi"),
                     [&](const Word& w) { return stream(w); });
  stream.finish();
  return kOk;
}

int cmd_irreducibles(const Options& o, std::ostream& out) {
  const Domain d = load_domain(o.domain);
  const Codec codec(Numbering::canonical(d));
  const std::string format = format_or(o, "words");
  check_format(format, {"words", "json"});
  const auto all = meet_irreducibles(d);
  if (format == "words") {
    for (const auto& m : all) {
      out << m.vertex.x << ',' << m.vertex.y << '=' << m.level << '\t' << codec.encode(m.tiling).to_string() << '\n';
    }
  } else {
    json doc = json::array();
    for (const auto& m : all) {
      doc.push_back({{"vertex", {m.vertex.x, m.vertex.y}}, {"level", m.level},
                     {"word", codec.encode(m.tiling).to_string()}});
    }
    out << doc.dump() << '\n';
  }
  return kOk;
}

int emit_graph(const CoverGraph& g, const char* name, const Options& o, std::ostream& out) {
  const std::string format = format_or(o, "dot");
  check_format(format, {"dot", "json"});
  out << (format == "dot" ? g.to_dot(name) : g.to_json() + "\n");
  return kOk;
}

int cmd_phase(const Options& o, std::ostream& out) {
  const Numbering numbering = load_numbering(load_domain(o.domain), o);
  if (!o.has_word && o.tiling.empty()) {
    out << phase_space(numbering).to_json() << '\n';
    return kOk;
  }
  const Codec codec(numbering);
  json pairs = json::array();
  for (const auto& [i, k] : phase(input_tiling(codec, o), numbering)) pairs.push_back({i, k});
  out << json{{"phase", pairs}}.dump() << '\n';
  return kOk;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const std::string format = stream_format(o);
  check_format(format, {"words", "jsonl", "count"});
  const Shape s = parse_shape(o.domain);
  if (format == "count" && o.limit < 0 && s.kind != Shape::None) {
    const oracle::Count n = s.kind == Shape::Rect ? oracle::count_rect(s.a, s.b) : oracle::count_hexagon(s.a, s.b, s.c);
    out << oracle::to_string(n) << '\n';
    return kOk;
  }
  const Numbering numbering = load_numbering(load_domain(o.domain), o);
  const oracle::Enumeration all = oracle::enumerate_bfs(numbering);
  const Codec codec(numbering);
  WordStream stream(out, codec, format, o.limit);
  for (const Word& w : all.words) {
    if (!stream(w)) break;
  }
  stream.finish();
  return kOk;
}

int cmd_render(const Options& o, std::ostream& out) {
  const Codec codec(load_numbering(load_domain(o.domain), o));
  const std::string format = format_or(o, "ascii");
  check_format(format, {"ascii", "svg"});
  const Tiling t = input_tiling(codec, o);
  out << (format == "ascii" ? render_ascii(t) : render_svg(t, o.heights));
  return kOk;
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::Untileable:
    case ErrorCode::Infeasible:
      return kNoSolution;
    default:
      return kUsage;
  }
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Domino and lozenge tilings via height functions", "tileforge"};
  app.require_subcommand(1);
  Options o;

  using Handler = std::function<int(const Options&, std::ostream&)>;
  std::map<CLI::App*, Handler> handlers;

  enum Extra : unsigned {
    kWord = 1, kInterval = 2, kConstraint = 4, kStream = 8, kTilingFile = 16, kNumbering = 32, kFormat = 64,
    kHeights = 128,
  };
  auto verb = [&](const char* name, const char* help, unsigned extra, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("domain", o.domain, "rect:MxN, hex:AxBxC or a domain file")->required();
    if (extra & kFormat) sub->add_option("--format", o.format, "output format");
    if (extra & kWord) sub->add_option("--word", o.word, "comma-separated word");
    if (extra & kInterval) {
      sub->add_option("--lo", o.lo, "lower word")->required();
      sub->add_option("--hi", o.hi, "upper word")->required();
    }
    if (extra & kConstraint) {
      sub->add_option("--constraint", o.constraints, "x,y=k (normalized level), repeatable");
      sub->add_option("--constraints", o.constraints_file, "JSON constraint file");
    }
    if (extra & kStream) {
      sub->add_flag("--count-only", o.count_only, "print only the number of tilings");
      sub->add_option("--limit", o.limit, "stop after N tilings")->check(CLI::NonNegativeNumber);
    }
    if (extra & kTilingFile) sub->add_option("--tiling", o.tiling, "tiling JSON file");
    if (extra & kNumbering) sub->add_option("--numbering", o.numbering, "numbering JSON file");
    if (extra & kHeights) sub->add_flag("--heights", o.heights, "include vertex heights");
    handlers.emplace(sub, std::move(h));
  };

  const unsigned tiling_out = kFormat | kHeights | kNumbering;
  verb("check", "report whether the domain is tileable", 0, cmd_check);
  verb("min", "minimal tiling", tiling_out, [](const Options& opt, std::ostream& os) {
    return cmd_extreme(opt, os, false);
  });
  verb("max", "maximal tiling", tiling_out, [](const Options& opt, std::ostream& os) {
    return cmd_extreme(opt, os, true);
  });
  verb("solve", "least tiling meeting height constraints", tiling_out | kConstraint, cmd_solve);
  verb("encode", "word of a tiling file", kTilingFile | kNumbering, cmd_encode);
  verb("decode", "tiling of a word", tiling_out | kWord, cmd_decode);
  verb("succ", "next tiling word", kWord | kNumbering, cmd_succ);
  verb("enum", "all tilings in word order", kFormat | kStream | kNumbering, cmd_enum);
  verb("interval", "tilings between two words", kFormat | kStream | kNumbering | kInterval, cmd_interval);
  verb("irreducibles", "meet-irreducible tilings", kFormat, cmd_irreducibles);
  verb("poset", "order on meet-irreducibles", kFormat, [](const Options& opt, std::ostream& os) {
    return emit_graph(irreducible_poset(load_domain(opt.domain)), "poset", opt, os);
  });
  verb("lattice", "flip lattice of all tilings", kFormat | kNumbering, [](const Options& opt, std::ostream& os) {
    return emit_graph(lattice_graph(load_numbering(load_domain(opt.domain), opt)), "lattice", opt, os);
  });
  verb("phase", "phase space, or the phase of one tiling", kWord | kTilingFile | kNumbering, cmd_phase);
  verb("oracle", "brute-force enumeration and closed-form counts", kFormat | kStream | kNumbering, cmd_oracle);
  verb("render", "draw a tiling", kFormat | kHeights | kWord | kTilingFile | kNumbering, cmd_render);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  for (const auto& [sub, handler] : handlers) {
    if (!sub->parsed()) continue;
    const CLI::Option* word = sub->get_option_no_throw("--word");
    o.has_word = word != nullptr && word->count() > 0;
    try {
      return handler(o, out);
    } catch (const Error& e) {
      err << "tileforge: " << e.what() << '\n';
      return exit_code(e.code());
    } catch (const std::exception& e) {
      err << "tileforge: " << e.what() << '\n';
      return kUsage;
    }
  }
  return kUsage;
}

}  // namespace tileforge::cli
