#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "acceptance/criteria.hpp"
#include "qtl/projectors.hpp"
#include "qtl/stable.hpp"

namespace qtl::cli {

using json = nlohmann::json;

namespace {

const char* const kCrossingConvention = "pos=q^1/2*id+q^-1/2*turnback;circle=-(q+q^-1)";
const char* const kGradingConvention = "framed(h,q,deg2);pos=[-1/2,1/2,1/2]->[1/2,-1/2,-1/2];circle=[0,+-1,1]";

struct Token {
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokens(std::string_view s, bool commas) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto sep = [&](char c) { return std::isspace(static_cast<unsigned char>(c)) || (commas && c == ','); };
  while (i < s.size()) {
    while (i < s.size() && sep(s[i])) ++i;
    std::size_t start = i;
    while (i < s.size() && !sep(s[i])) ++i;
    if (i > start) out.push_back({std::string(s.substr(start, i - start)), start});
  }
  return out;
}

int parse_int(const Token& t, std::size_t offset = 0) {
  std::string_view v(t.text);
  v.remove_prefix(offset);
  std::size_t i = 0;
  if (i < v.size() && (v[i] == '-' || v[i] == '+')) ++i;
  if (i == v.size()) throw ParseError("expected an integer", t.pos + offset);
  long long x = 0;
  for (; i < v.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(v[i]))) throw ParseError("unexpected character", t.pos + offset + i);
    x = x * 10 + (v[i] - '0');
    if (x > 1000000) throw ParseError("index too large", t.pos + offset);
  }
  return static_cast<int>(v[0] == '-' ? -x : x);
}

std::string fixed(double v) {
  if (std::abs(v) < 5e-13) v = 0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

void emit_conventions(const Job& job, std::ostream& out) {
  if (job.format == Format::jsonl)
    out << json{{"type", "conventions"}, {"crossing", kCrossingConvention}, {"grading", kGradingConvention}}.dump()
        << "\n";
  else
    out << "# conventions: crossing " << kCrossingConvention << "; grading " << kGradingConvention << "\n";
}

TangleDiagram input_diagram(const Job& job, int strands) {
  if (!job.slices_file.empty()) {
    std::ifstream f(job.slices_file);
    if (!f) throw ParseError("cannot read " + job.slices_file, 0);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_slices(ss.str());
  }
  return parse_braid(job.input, strands);
}

int strands_for_n(const Job& job) {
  if (job.n >= 0) return 2 * job.n;
  return job.strands;
}

/// A braid or (n,n) slice diagram closed up; closed slice diagrams pass through.
TangleDiagram closed(const TangleDiagram& d) { return d.top() == 0 && d.bottom() == 0 ? d : d.closure(); }

void print_skein(const Job& job, const std::string& type, const SkeinElement& x, json extra, std::ostream& out) {
  if (job.format == Format::jsonl) {
    json terms = json::array();
    for (const auto& [t, c] : x.terms()) terms.push_back({{"tangle", t.str()}, {"coeff", c.str()}});
    extra["type"] = type;
    extra["terms"] = terms;
    out << extra.dump() << "\n";
  } else {
    out << x.str() << "\n";
  }
}

void print_betti(const Job& job, const BettiTable& b, std::ostream& out) {
  if (job.format == Format::jsonl) {
    for (const auto& [k, r] : b.ranks)
      out << json{{"h", half_str(k.first)}, {"q", half_str(k.second)}, {"z2", half_str(b.mu2)}, {"rank", r}}.dump()
          << "\n";
  } else {
    out << b.str() << "total rank " << b.total() << ", deg_2 class " << half_str(b.mu2) << " mod 2\n";
  }
}

void print_window(const Job& job, const StableWindow& w, std::ostream& out) {
  if (job.format == Format::jsonl) {
    out << json{{"type", "window"},     {"n", w.n},
                {"m", w.m_used},        {"crossings", w.crossings},
                {"h_min", half_str(w.h2_min_valid)}, {"h_max", half_str(w.h2_max)}}
               .dump()
        << "\n";
    auto rows = [&](const BettiTable& b, const char* status) {
      for (const auto& [k, r] : b.ranks)
        out << json{{"h", half_str(k.first)}, {"q", half_str(k.second)}, {"rank", r}, {"status", status}}.dump()
            << "\n";
    };
    rows(w.table, "guaranteed");
    rows(w.provisional, "provisional");
  } else {
    out << w.str();
  }
}

int dispatch(const Job& job, std::ostream& out) {
  const std::string& c = job.command;
  if (c == "selftest") {
    if (job.format == Format::jsonl) {
      int failures = 0;
      for (int id = 1; id <= acceptance::kCriteria; ++id) {
        acceptance::CriterionResult r = acceptance::run_criterion(id);
        failures += !r.pass;
        out << json{{"criterion", id}, {"pass", r.pass}, {"summary", r.summary}}.dump() << std::endl;
      }
      return failures ? kFailure : kOk;
    }
    return acceptance::run_acceptance(out) ? kFailure : kOk;
  }
  emit_conventions(job, out);
  if (c == "bracket") {
    TangleDiagram d = input_diagram(job, job.strands);
    print_skein(job, "bracket", bracket(d), {{"diagram", d.str()}}, out);
  } else if (c == "closure") {
    TangleDiagram d = closed(input_diagram(job, job.strands));
    HalfLaurent v = closed_bracket(d);
    if (job.format == Format::jsonl)
      out << json{{"type", "closure"}, {"diagram", d.str()}, {"value", v.str()}}.dump() << "\n";
    else
      out << v.str() << "\n";
  } else if (c == "jw") {
    if (job.n < 0) throw ParseError("jw needs --n", 0);
    const SkeinElement& p = job.m >= 0 ? projector_family(job.n, job.m).element : wenzl(job.n).element;
    print_skein(job, "jw", p, {{"n", job.n}, {"m", job.m >= 0 ? job.m : job.n}}, out);
  } else if (c == "stable-wrt") {
    TangleDiagram d = input_diagram(job, strands_for_n(job));
    StableInvariant s = stable_invariant(d);
    if (job.format == Format::jsonl)
      out << json{{"type", "stable-wrt"}, {"n", s.n}, {"poly", s.str()}}.dump() << "\n";
    else
      out << s.str() << "\n";
    for (int r : job.levels) {
      auto z = wrt_at_level(s, r);
      bool claimed = wrt_level_claimed(s, r);
      if (job.format == Format::jsonl)
        out << json{{"type", "level"}, {"r", r}, {"re", fixed(z.real())}, {"im", fixed(z.imag())}, {"claimed", claimed}}
                   .dump()
            << "\n";
      else
        out << "r=" << r << ": " << fixed(z.real()) << " + " << fixed(z.imag()) << "i"
            << (claimed ? "" : " (r < n+2, not claimed)") << "\n";
    }
  } else if (c == "kh") {
    print_betti(job, scan_link(closed(input_diagram(job, job.strands))), out);
  } else if (c == "stable-kh" || c == "hochschild") {
    const int budget = job.budget > 0 ? job.budget : crossing_budget();
    TangleDiagram tau;
    if (c == "hochschild") {
      if (job.n < 0) throw ParseError("hochschild needs --n", 0);
      tau = TangleDiagram::identity(2 * job.n);
    } else {
      tau = input_diagram(job, strands_for_n(job));
    }
    StableWindow w = job.m > 0 ? stable_window(tau, job.m, budget) : stable_homology(tau, job.depth, budget);
    print_window(job, w, out);
  } else if (c == "conjecture") {
    if (job.n < 0) throw ParseError("conjecture needs --n", 0);
    ConjectureReport r = compare_conjecture(job.n, job.depth, job.budget > 0 ? job.budget : crossing_budget());
    if (job.format == Format::jsonl) {
      for (const auto& row : r.rows)
        out << json{{"h", half_str(row.h2)},
                    {"q", half_str(row.q2)},
                    {"computed", row.computed},
                    {"conjectured", row.conjectured},
                    {"status", row.verdict}}
                   .dump()
            << "\n";
    } else {
      out << r.str();
    }
  } else {
    throw ParseError("unknown command " + c, 0);
  }
  return kOk;
}

}  // namespace

TangleDiagram parse_braid(std::string_view text, int strands) {
  std::vector<int> word;
  int top = 0;
  for (const Token& t : tokens(text, true)) {
    int g = parse_int(t);
    if (g == 0) throw ParseError("generator indices are nonzero", t.pos);
    if (strands > 0 && std::abs(g) >= strands) throw ParseError("generator out of range", t.pos);
    top = std::max(top, std::abs(g));
    word.push_back(g);
  }
  return TangleDiagram::braid(strands > 0 ? strands : top + 1, word);
}

TangleDiagram parse_slices(std::string_view text) {
  std::vector<Token> ts = tokens(text, false);
  if (ts.size() < 2 || ts[0].text != "strands") throw ParseError("expected 'strands N:'", 0);
  Token count = ts[1];
  if (count.text.empty() || count.text.back() != ':') throw ParseError("expected ':' after the strand count", count.pos);
  count.text.pop_back();
  int bottom = parse_int(count);
  if (bottom < 0) throw ParseError("negative strand count", count.pos);
  std::vector<Slice> slices;
  for (std::size_t i = 2; i < ts.size(); ++i) {
    const Token& t = ts[i];
    std::size_t at = t.text.find('@');
    if (at == std::string::npos) throw ParseError("expected kind@position", t.pos);
    std::string kind = t.text.substr(0, at);
    SliceKind k;
    if (kind == "cup")
      k = SliceKind::cup;
    else if (kind == "cap")
      k = SliceKind::cap;
    else if (kind == "x")
      k = SliceKind::pos;
    else if (kind == "X")
      k = SliceKind::neg;
    else
      throw ParseError("unknown slice kind '" + kind + "'", t.pos);
    int p = parse_int(t, at + 1);
    if (p < 1) throw ParseError("positions are 1-based", t.pos + at + 1);
    slices.push_back({k, p - 1});
  }
  return TangleDiagram(bottom, slices);
}

int run(const Job& job, std::ostream& out, std::ostream& err) {
  try {
    if (job.command == "selftest") return dispatch(job, out);
    // nothing reaches out unless the whole job succeeds
    std::ostringstream buf;
    int code = dispatch(job, buf);
    out << buf.str();
    return code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const MalformedDiagram& e) {
    err << "malformed diagram: " << e.what() << "\n";
    return kParse;
  } catch (const ValenceMismatch& e) {
    err << "valence mismatch: " << e.what() << "\n";
    return kParse;
  } catch (const InvalidParity& e) {
    err << "invalid parity: " << e.what() << "\n";
    return kParse;
  } catch (const DepthInfeasible& e) {
    err << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const TooLarge& e) {
    err << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return kInvariant;
  } catch (const PolynomialityViolation& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return kInvariant;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"quantum topology toolkit: brackets, projectors, stable invariants, Khovanov homology"};
  app.require_subcommand(1);
  Job job;
  std::string format = "text";

  auto add_common = [&](CLI::App* sub, bool word) {
    if (word) {
      sub->add_option("word", job.input, "braid word, e.g. \"1 -2 1\"");
      sub->add_option("--slices", job.slices_file, "slice file in 'strands N: cup@1 x@2 ...' form");
      sub->add_option("--strands", job.strands, "strand count (default max|i|+1)")->check(CLI::PositiveNumber);
    }
    sub->add_option("--format", format, "text or jsonl")->check(CLI::IsMember({"text", "jsonl"}));
  };
  struct Sub {
    const char* name;
    const char* help;
    bool word;
  };
  const Sub subs[] = {
      {"bracket", "Kauffman bracket of a braid or slice diagram", true},
      {"closure", "bracket of the closure in S^3", true},
      {"jw", "Jones-Wenzl projector P_n, or P_{n,m} with --m", false},
      {"stable-wrt", "stable invariant of a (2n,2n) braid", true},
      {"kh", "Khovanov homology of the closure", true},
      {"stable-kh", "guaranteed window of stable homology", true},
      {"hochschild", "window of HH_*(H_n)", false},
      {"conjecture", "compare the conjectured HH^*(H_n) with the computed window", false},
      {"selftest", "run the acceptance suite", false},
  };
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_common(sub, s.word);
    std::string name = s.name;
    if (name == "jw" || name == "stable-wrt" || name == "stable-kh" || name == "hochschild" || name == "conjecture")
      sub->add_option("--n", job.n, "half the strand count (projector size for jw)")->check(CLI::NonNegativeNumber);
    if (name == "jw" || name == "stable-kh") sub->add_option("--m", job.m, "channel for jw, twist count for stable-kh");
    if (name == "stable-kh" || name == "hochschild" || name == "conjecture") {
      sub->add_option("--depth", job.depth, "guaranteed homological degrees")->check(CLI::NonNegativeNumber);
      sub->add_option("--budget", job.budget, "crossing budget")->check(CLI::PositiveNumber);
    }
    if (name == "stable-wrt") sub->add_option("--level", job.levels, "evaluate at q = exp(i pi / r)");
    sub->callback([&job, name] { job.command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kParse;
  }
  job.format = format == "jsonl" ? Format::jsonl : Format::text;
  return run(job, out, err);
}

}  // namespace qtl::cli
