#include "bsl/cli.hpp"

#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bsl/bsclassic.hpp"
#include "bsl/error.hpp"
#include "bsl/markedspace.hpp"
#include "bsl/morphisms.hpp"

namespace bsl::cli {

namespace {

using nlohmann::json;

inline constexpr std::size_t kDefaultCap = 14;

struct Options {
  std::string m = "2", m2, xi, xi2, word, word2, alphabet = "compact";
  std::size_t count = 5, depth = 5, max_len = kDefaultCap, cap = kDefaultCap;
  bool json = false, serial = false;
  // command specific
  std::string kind, digits, aut, image_a = "a", image_b = "b", image_a_wreath, image_b_wreath;
  std::string p, q, n;
  std::size_t index = 1, k = 1;
};

// Input validation failures become usage errors (exit 2).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

long parse_long(const std::string& s, const char* flag) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string(flag) + " expects a signed decimal integer, got '" + s + "'");
  }
}

MarkedGroupSpec spec_from(const std::string& m, const std::string& xi, const char* flag) {
  if (xi.empty()) throw UsageError(std::string(flag) + " is required");
  XiSpec x;
  try {
    x = parse_xi(xi);
  } catch (const ParseError& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
  return MarkedGroupSpec(parse_long(m, "--m"), x);
}

WordMode mode_of(const Options& o) {
  if (o.alphabet == "compact") return WordMode::Compact;
  if (o.alphabet == "extended") return WordMode::Extended;
  throw UsageError("--alphabet must be compact or extended");
}

GroupWord word_from(const Options& o, const std::string& text, const char* flag) {
  try {
    return parse_word(text, mode_of(o));
  } catch (const ParseError& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

std::string show_word(const GroupWord& w, WordMode preferred) {
  if (preferred == WordMode::Compact && is_compact_expressible(w)) return format_word(w, WordMode::Compact);
  return format_word(w, WordMode::Extended);
}

std::vector<long> parse_digit_flag(const std::string& s) {
  std::vector<long> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(parse_long(tok, "--digits"));
  return out;
}

json big(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

void emit(std::ostream& out, const Options& o, const json& j, const std::string& plain) {
  if (o.json)
    out << j.dump() << '\n';
  else
    out << plain << '\n';
}

using Handler = std::function<void(const Options&, std::ostream&)>;

void cmd_rdigits(const Options& o, std::ostream& out) {
  auto spec = spec_from(o.m, o.xi, "--xi");
  auto d = r_digits(spec, o.count);
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? " " : "") + std::to_string(d[i]);
  emit(out, o, {{"digits", d}}, s);
}

void cmd_wp(const Options& o, std::ostream& out) {
  auto spec = spec_from(o.m, o.xi, "--xi");
  auto w = word_from(o, o.word, "--word");
  bool t = is_trivial(GroupCtx(spec), w);
  emit(out, o, {{"trivial", t}}, t ? "trivial" : "nontrivial");
}

json form_json(const ReducedForm& f) {
  return {{"form", f.to_string()}, {"t_length", f.t_length()}, {"sigma", f.sigma()}};
}

void cmd_nf(const Options& o, std::ostream& out) {
  auto spec = spec_from(o.m, o.xi, "--xi");
  auto nf = normal_form(GroupCtx(spec), word_from(o, o.word, "--word"));
  emit(out, o, form_json(nf.form), nf.to_string());
}

void cmd_reduce(const Options& o, std::ostream& out) {
  auto spec = spec_from(o.m, o.xi, "--xi");
  auto r = britton_reduce(GroupCtx(spec), word_from(o, o.word, "--word"));
  emit(out, o, form_json(r), r.to_string());
}

void cmd_conj(const Options& o, std::ostream& out) {
  auto spec = spec_from(o.m, o.xi, "--xi");
  auto v = word_from(o, o.word, "--word");
  auto w = word_from(o, o.word2, "--word2");
  auto g = are_conjugate(GroupCtx(spec), v, w);
  if (!g) {
    emit(out, o, {{"conjugate", false}, {"witness", nullptr}}, "not conjugate");
    return;
  }
  std::string text = format_word(*g, WordMode::Extended);
  emit(out, o, {{"conjugate", true}, {"witness", text}}, text.empty() ? "conjugate via" : "conjugate via " + text);
}

void check_cap(const Options& o) {
  if (o.max_len > o.cap)
    throw UsageError("--max-len " + std::to_string(o.max_len) + " exceeds the enumeration cap " +
                     std::to_string(o.cap) + "; raise --cap to override");
}

void cmd_dist(const Options& o, std::ostream& out) {
  check_cap(o);
  auto g1 = spec_from(o.m, o.xi, "--xi");
  auto g2 = spec_from(o.m2.empty() ? o.m : o.m2, o.xi2, "--xi2");
  auto hit = shortest_distinguishing(g1, g2, o.max_len, o.serial ? ExecPolicy::Serial : ExecPolicy::Parallel);
  std::optional<DistanceBounds> b;
  try {
    b = distance_bounds(g1, g2);
  } catch (const GcdMismatch&) {
  } catch (const SameGroup&) {
  } catch (const PreconditionViolated&) {
  }
  json j = {{"nu", nullptr}, {"word", nullptr}, {"lower_exp", nullptr}, {"upper_exp", nullptr}, {"h", nullptr}};
  std::string plain;
  if (hit) {
    std::string w = format_word(hit->word, WordMode::Compact);
    j["nu"] = hit->length;
    j["word"] = w;
    plain = "nu=" + std::to_string(hit->length) + " word=" + w;
  } else {
    plain = "no distinguishing word up to length " + std::to_string(o.max_len);
  }
  if (b) {
    j["h"] = b->h;
    j["lower_exp"] = b->lower_exp;
    j["upper_exp"] = b->upper_exp;
    plain += " h=" + std::to_string(b->h) + " lower=e^-" + std::to_string(b->lower_exp) + " upper=e^-" +
             std::to_string(b->upper_exp);
  }
  emit(out, o, j, plain);
}

void cmd_bounds(const Options& o, std::ostream& out) {
  auto g1 = spec_from(o.m, o.xi, "--xi");
  auto g2 = spec_from(o.m2.empty() ? o.m : o.m2, o.xi2, "--xi2");
  auto b = distance_bounds(g1, g2);
  emit(out, o, {{"h", b.h}, {"lower_exp", b.lower_exp}, {"upper_exp", b.upper_exp}},
       "h=" + std::to_string(b.h) + " lower=e^-" + std::to_string(b.lower_exp) + " upper=e^-" +
           std::to_string(b.upper_exp));
}

void cmd_iso(const Options& o, std::ostream& out) {
  auto g1 = spec_from(o.m, o.xi, "--xi");
  auto g2 = spec_from(o.m2.empty() ? o.m : o.m2, o.xi2, "--xi2");
  bool iso = isomorphic(g1, g2);
  emit(out, o, {{"isomorphic", iso}}, iso ? "isomorphic" : "not isomorphic");
}

void cmd_recover(const Options& o, std::ostream& out) {
  auto spec = spec_from(o.m, o.xi, "--xi");
  auto rec = recover_parameters(limit_oracle(spec), o.count);
  std::string s = "m=" + std::to_string(rec.m_abs) + " digits=";
  for (std::size_t i = 0; i < rec.digits.size(); ++i) s += (i ? " " : "") + std::to_string(rec.digits[i]);
  emit(out, o, {{"m_abs", rec.m_abs}, {"digits", rec.digits}}, s);
}

void cmd_relator(const Options& o, std::ostream& out) {
  GroupWord w;
  if (o.kind == "b" || o.kind == "bracket") {
    GroupCtx ctx(spec_from(o.m, o.xi, "--xi"));
    w = o.kind == "b" ? relator_b(ctx, o.index) : relator_bracket(ctx, o.index);
  } else if (o.kind == "v") {
    w = relator_v(static_cast<long>(o.index));
  } else if (o.kind == "w" || o.kind == "wine") {
    long m = parse_long(o.m, "--m");
    auto t = parse_digit_flag(o.digits);
    long am = m < 0 ? -m : m;
    for (long d : t)
      if (d < 0 || d >= am) throw UsageError("--digits entries must lie in [0, |m|)");
    w = o.kind == "w" ? relator_w(m, t) : relator_win_e(m, t);
  } else {
    throw UsageError("--kind must be one of b, bracket, v, w, wine");
  }
  std::string s = format_word(w, WordMode::Compact);
  emit(out, o, {{"word", s}, {"length", w.size()}}, s);
}

void cmd_wreath(const Options& o, std::ostream& out) {
  auto spec = spec_from(o.m, o.xi, "--xi");
  auto x = wreath_image(GroupCtx(spec), word_from(o, o.word, "--word"));
  emit(out, o, wreath_to_json(x), x.to_string());
}

void cmd_aut(const Options& o, std::ostream& out) {
  auto spec = spec_from(o.m, o.xi, "--xi");
  auto w = word_from(o, o.word, "--word");
  AutSpec a;
  try {
    a = parse_aut(o.aut);
  } catch (const ParseError& e) {
    throw UsageError(std::string("--aut: ") + e.what());
  }
  auto img = apply_automorphism(GroupCtx(spec), a, w);
  std::string s = show_word(img, WordMode::Compact);
  emit(out, o, {{"word", s}}, s);
}

void cmd_hom(const Options& o, std::ostream& out) {
  auto src = spec_from(o.m, o.xi, "--xi");
  HomCheck h;
  std::string target;
  if (!o.image_a_wreath.empty() || !o.image_b_wreath.empty()) {
    WreathElem ia, ib;
    try {
      ia = wreath_from_json(json::parse(o.image_a_wreath.empty() ? R"({"poly":{"offset":0,"coeffs":[]},"shift":1})"
                                                                 : o.image_a_wreath));
      ib = wreath_from_json(json::parse(o.image_b_wreath.empty() ? R"({"poly":{"offset":0,"coeffs":[1]},"shift":0})"
                                                                 : o.image_b_wreath));
    } catch (const json::exception& e) {
      throw UsageError(std::string("wreath image: ") + e.what());
    }
    h = hom_check(src, ia, ib, o.depth);
  } else {
    auto dst = spec_from(o.m2.empty() ? o.m : o.m2, o.xi2.empty() ? o.xi : o.xi2, "--xi2");
    h = hom_check(src, dst, word_from(o, o.image_a, "--image-a"), word_from(o, o.image_b, "--image-b"), o.depth);
  }
  json j = {{"pass", h.pass}, {"depth", h.depth}, {"truncated", true}};
  j["first_failure"] = h.first_failure ? json(*h.first_failure) : json(nullptr);
  std::string s = h.pass ? "pass (truncated check: relators [b,b_i] for i<=" + std::to_string(h.depth) + ")"
                         : "fail at i=" + std::to_string(*h.first_failure);
  emit(out, o, j, s);
}

void cmd_bswp(const Options& o, std::ostream& out) {
  if (o.p.empty() || o.q.empty()) throw UsageError("--p and --q are required");
  BSSpec spec(parse_long(o.p, "--p"), parse_long(o.q, "--q"));
  BSWord w;
  try {
    w = BSWord::parse(o.word);
  } catch (const ParseError& e) {
    throw UsageError(std::string("--word: ") + e.what());
  }
  bool t = bs_is_trivial(spec, w);
  emit(out, o, {{"trivial", t}}, t ? "trivial" : "nontrivial");
}

void cmd_nk(const Options& o, std::ostream& out) {
  if (o.n.empty()) throw UsageError("--n is required");
  auto r = bs_n_of_k(parse_long(o.m, "--m"), parse_long(o.n, "--n"), o.k);
  emit(out, o, {{"N", r.n_steps}, {"alpha", big(r.alpha)}},
       "N=" + std::to_string(r.n_steps) + " alpha=" + r.alpha.get_str());
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computation in limits of Baumslag-Solitar groups", "bsl"};
  app.require_subcommand(1);
  Options o;

  struct Cmd {
    const char* name;
    const char* help;
    Handler run;
  };
  const std::vector<Cmd> cmds = {
      {"rdigits", "digits r_1..r_count", cmd_rdigits},
      {"wp", "word problem", cmd_wp},
      {"nf", "normal form", cmd_nf},
      {"reduce", "Britton-reduced form", cmd_reduce},
      {"conj", "conjugacy of --word and --word2", cmd_conj},
      {"dist", "shortest distinguishing word and distance bounds", cmd_dist},
      {"bounds", "distance bounds from the common digit prefix", cmd_bounds},
      {"iso", "isomorphism test", cmd_iso},
      {"recover", "recover |m| and digits from the word problem", cmd_recover},
      {"relator", "relator words (b, bracket, v, w, wine)", cmd_relator},
      {"wreath", "image in Z wr Z", cmd_wreath},
      {"aut", "apply J, phi:<evec>, theta:<k> or embed:<d>", cmd_aut},
      {"hom", "truncated homomorphism check", cmd_hom},
      {"bswp", "word problem in BS(p, q)", cmd_bswp},
      {"nk", "N(k) for BS(m, n)", cmd_nk},
  };
  std::map<CLI::App*, Handler> handlers;
  for (const auto& c : cmds) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--m", o.m, "m (signed decimal)");
    sub->add_option("--m2", o.m2, "m of the second group (defaults to --m)");
    sub->add_option("--xi", o.xi, "xi: int:<n> | rat:<p>/<q> | rseq:<digits>[;<period>]");
    sub->add_option("--xi2", o.xi2, "xi of the second group");
    sub->add_option("--word", o.word, "word");
    sub->add_option("--word2", o.word2, "second word");
    sub->add_option("--alphabet", o.alphabet, "compact or extended");
    sub->add_option("--count", o.count, "number of digits");
    sub->add_option("--depth", o.depth, "relator depth");
    sub->add_option("--max-len", o.max_len, "enumeration length");
    sub->add_option("--cap", o.cap, "enumeration cap override");
    sub->add_flag("--json", o.json, "JSON output");
    if (std::string(c.name) == "dist") sub->add_flag("--serial", o.serial, "use the serial enumerator");
    if (std::string(c.name) == "relator") {
      sub->add_option("--kind", o.kind, "b | bracket | v | w | wine")->required();
      sub->add_option("--index", o.index, "i for b/bracket, k for v");
      sub->add_option("--digits", o.digits, "t_1,...,t_n for w/wine");
    }
    if (std::string(c.name) == "aut") sub->add_option("--aut", o.aut, "automorphism")->required();
    if (std::string(c.name) == "hom") {
      sub->add_option("--image-a", o.image_a, "image of a");
      sub->add_option("--image-b", o.image_b, "image of b");
      sub->add_option("--wreath-a", o.image_a_wreath, "image of a in Z wr Z (JSON)");
      sub->add_option("--wreath-b", o.image_b_wreath, "image of b in Z wr Z (JSON)");
    }
    if (std::string(c.name) == "bswp") {
      sub->add_option("--p", o.p, "p")->required();
      sub->add_option("--q", o.q, "q")->required();
    }
    if (std::string(c.name) == "nk") {
      sub->add_option("--n", o.n, "n")->required();
      sub->add_option("--k", o.k, "k");
    }
    handlers.emplace(sub, c.run);
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    for (auto* sub : app.get_subcommands()) handlers.at(sub)(o, out);
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace bsl::cli
