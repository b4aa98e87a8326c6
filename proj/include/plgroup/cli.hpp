#pragma once

#include "plgroup/classcalc.hpp"
#include "plgroup/constructions.hpp"
#include "plgroup/io.hpp"
#include "plgroup/plot.hpp"
#include "plgroup/session.hpp"
#include "plgroup/toweralg.hpp"
#include "plgroup/towers.hpp"
#include "plgroup/wordlang.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace plgroup::cli {

/// Flattens a word expression into a freely reduced generator word.
inline GroupWord ast_to_word(const AstPtr& w) {
  switch (w->kind) {
    case WordAst::Kind::Gen:
      return GroupWord::letter(w->name);
    case WordAst::Kind::Compose: {
      GroupWord out;
      for (auto& item : w->items) out = out.concat(ast_to_word(item));
      return out;
    }
    case WordAst::Kind::Power:
      return ast_to_word(w->a).pow(w->exponent);
    case WordAst::Kind::Conj: {
      GroupWord a = ast_to_word(w->a), b = ast_to_word(w->b);
      return b.inverse().concat(a).concat(b);
    }
    case WordAst::Kind::Comm: {
      GroupWord a = ast_to_word(w->a), b = ast_to_word(w->b);
      return a.inverse().concat(b.inverse()).concat(a).concat(b);
    }
  }
  return {};
}

inline Orbital parse_orbital(std::string s) {
  auto strip = [](std::string& t) {
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(0, 1);
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
  };
  strip(s);
  if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  auto comma = s.find(',');
  if (comma == std::string::npos)
    throw std::domain_error("orbital must look like (p/q, r/s): '" + s + "'");
  std::string lo = s.substr(0, comma), hi = s.substr(comma + 1);
  strip(lo);
  strip(hi);
  return Orbital(parse_rational(lo), parse_rational(hi));
}

inline GeneratorFamily make_family(const std::string& name, const std::vector<long>& params) {
  auto want = [&](std::size_t n) {
    if (params.size() != n)
      throw std::domain_error("family '" + name + "' takes " + std::to_string(n) +
                              " parameter(s)");
  };
  if (name == "w") {
    want(1);
    return w_generators(static_cast<int>(params[0]));
  }
  if (name == "zwr") {
    want(1);
    return zwr_generators(static_cast<int>(params[0]));
  }
  if (name == "wrz") {
    want(1);
    return wrz_generators(static_cast<int>(params[0]));
  }
  if (name == "gamma") {
    want(1);
    return gamma_family(static_cast<int>(params[0]));
  }
  if (name == "upsilon") {
    want(1);
    return upsilon_family(static_cast<int>(params[0]));
  }
  if (name == "wtrunc") {
    want(1);
    return w_truncation(static_cast<int>(params[0]));
  }
  if (name == "g1") {
    want(1);
    return g1_generators(static_cast<int>(params[0]));
  }
  if (name == "gn") {
    want(2);
    return gn_generators(static_cast<int>(params[0]), static_cast<int>(params[1]));
  }
  if (name == "ab") {
    want(0);
    GeneratorFamily fam{"ab", {}, {{"a", alpha()}, {"b0", beta0()}}};
    return fam;
  }
  throw std::domain_error("unknown family '" + name + "'");
}

/// "w2", "zwr3", ... compact, or colon form "gn:2:1".
inline GeneratorFamily parse_family_spec(const std::string& spec) {
  if (spec.find(':') != std::string::npos) {
    std::vector<std::string> tokens;
    std::istringstream in(spec);
    std::string tok;
    while (std::getline(in, tok, ':')) tokens.push_back(tok);
    std::vector<long> params;
    for (std::size_t i = 1; i < tokens.size(); ++i) params.push_back(std::stol(tokens[i]));
    return make_family(tokens[0], params);
  }
  if (spec == "ab") return make_family("ab", {});
  std::size_t digits = spec.size();
  while (digits > 0 && std::isdigit(static_cast<unsigned char>(spec[digits - 1]))) --digits;
  if (digits == 0 || digits == spec.size())
    throw std::domain_error("bad family spec '" + spec + "'");
  std::string name = spec.substr(0, digits);
  if (name == "g1" || name == "gn")
    throw std::domain_error("family '" + name + "' needs the colon form, e.g. gn:2:1");
  return make_family(name, {std::stol(spec.substr(digits))});
}

struct SessionSource {
  std::string session_file;
  std::string family_spec;
  bool normalize = false;

  GroupSession load(int radius) const {
    if (!session_file.empty() && !family_spec.empty())
      throw std::domain_error("--session and --family are mutually exclusive");
    if (!family_spec.empty())
      return GroupSession(parse_family_spec(family_spec).members, radius);
    if (!session_file.empty()) {
      std::ifstream in(session_file);
      if (!in) throw std::domain_error("cannot open session file '" + session_file + "'");
      return GroupSession(read_session_members(in, normalize), radius);
    }
    throw std::domain_error("no session: pass --session <file> or --family <spec>");
  }
};

inline std::string chain_line(const TransitionChain& chain) {
  std::string line = "chain " + std::to_string(chain.length()) + ":";
  for (int i = 0; i < chain.length(); ++i) {
    if (i) line += ";";
    line += " " + to_string(chain.entries[i].orbital) + " " + chain.entries[i].word.str() +
            " p=" + rat_str(chain.points[i]);
  }
  return line;
}

/// Batch command driver; returns 0 on success, 1 on domain errors, 2 on
/// usage errors.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact computation in the group of PL homeomorphisms of [0,1]"};
  app.fallthrough(true);
  app.require_subcommand(1);

  SessionSource source;
  app.add_option("--session", source.session_file, "session file of plmap v1 member blocks");
  app.add_option("--family", source.family_spec, "built-in family, e.g. w2, zwr3, ab, gn:2:1");
  app.add_flag("--normalize", source.normalize, "canonicalize vertex tables while parsing");

  std::string word1, word2, orbital_arg, point1, point2, expr, tower_spec;
  std::vector<std::string> plot_words;
  int radius_towers = 2, radius_chains = 2, radius_depth = 2, radius_mover = 2;
  bool svg = false, tsv = false;
  std::string gen_name;
  std::vector<long> gen_params;

  auto* c_gen = app.add_subcommand("gen", "emit a generator family");
  c_gen->add_option("family", gen_name)->required();
  c_gen->add_option("params", gen_params);

  auto* c_eval = app.add_subcommand("eval", "evaluate a word at a point");
  c_eval->add_option("word", word1)->required();
  c_eval->add_option("x", point1)->required();

  auto* c_orbitals = app.add_subcommand("orbitals", "support components of a word");
  c_orbitals->add_option("word", word1)->required();

  auto* c_towers = app.add_subcommand("towers", "maximum tower over the ball");
  c_towers->add_option("-L", radius_towers, "ball radius");

  auto* c_chains = app.add_subcommand("chains", "maximal transition chains over the ball");
  c_chains->add_option("-L", radius_chains, "ball radius");

  auto* c_depth = app.add_subcommand("depth", "tower-height lower bound for the depth");
  c_depth->add_option("-L", radius_depth, "ball radius");

  auto* c_phi = app.add_subcommand("phi", "end-slope pair of a word on an orbital");
  c_phi->add_option("word", word1)->required();
  c_phi->add_option("orbital", orbital_arg)->required();

  auto* c_mover = app.add_subcommand("mover", "word moving c past d inside a group orbital");
  c_mover->add_option("orbital", orbital_arg)->required();
  c_mover->add_option("c", point1)->required();
  c_mover->add_option("d", point2)->required();
  c_mover->add_option("-L", radius_mover, "ball radius");

  auto* c_descend = app.add_subcommand("descend", "commutator descent of an exemplary tower");
  c_descend->add_option("tower", tower_spec, "entries 'word@(lo,hi)' joined by ';'")
      ->required();

  auto* c_dc = app.add_subcommand("dc", "double-commutator orbital report");
  c_dc->add_option("gword", word1)->required();
  c_dc->add_option("hword", word2)->required();

  auto* c_meff = app.add_subcommand("meff", "minimal mutual-efficiency powers");
  c_meff->add_option("gword", word1)->required();
  c_meff->add_option("hword", word2)->required();

  auto* c_classdl = app.add_subcommand("classdl", "derived length of a class expression");
  c_classdl->add_option("expr", expr)->required();

  auto* c_plot = app.add_subcommand("plot", "emit graphs of words");
  c_plot->add_option("words", plot_words)->required();
  c_plot->add_flag("--svg", svg);
  c_plot->add_flag("--tsv", tsv);

  std::vector<const char*> argv;
  argv.push_back("plgroup");
  for (auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (c_gen->parsed()) {
      out << write_session_members(make_family(gen_name, gen_params).members);
      return 0;
    }
    if (c_classdl->parsed()) {
      ClassExpr e = parse_class_expr(expr);
      auto cert = embed_in_gn_certificate(e);
      out << "derived_length = " << derived_length(e) << "\n";
      out << "embeds_in = G(" << cert.level << ")\n";
      return 0;
    }
    if (c_eval->parsed()) {
      GroupSession s = source.load(0);
      out << rat_str(eval(evaluate(word1, s), parse_rational(point1))) << "\n";
      return 0;
    }
    if (c_orbitals->parsed()) {
      GroupSession s = source.load(0);
      for (auto& eo : support_components(evaluate(word1, s)))
        out << to_string(eo.orbital) << " "
            << (eo.direction == Direction::RightMover ? "right" : "left") << "\n";
      return 0;
    }
    if (c_towers->parsed()) {
      GroupSession s = source.load(radius_towers);
      Tower t = find_max_tower(s.ball_signed_orbitals());
      out << "height " << t.height() << "\n";
      for (auto& e : t.entries) out << to_string(e.orbital) << " " << e.word.str() << "\n";
      return 0;
    }
    if (c_chains->parsed()) {
      GroupSession s = source.load(radius_chains);
      for (auto& chain : find_transition_chains(s.ball_signed_orbitals()))
        out << chain_line(chain) << "\n";
      return 0;
    }
    if (c_depth->parsed()) {
      GroupSession s = source.load(radius_depth);
      out << "depth >= " << find_max_tower(s.ball_signed_orbitals()).height() << "\n";
      return 0;
    }
    if (c_phi->parsed()) {
      GroupSession s = source.load(0);
      auto [lead, trail] = phi(evaluate(word1, s), parse_orbital(orbital_arg));
      out << "(" << rat_str(lead) << ", " << rat_str(trail) << ")\n";
      return 0;
    }
    if (c_mover->parsed()) {
      GroupSession s = source.load(radius_mover);
      Rational c = parse_rational(point1), d = parse_rational(point2);
      MoverResult r = mover(s, parse_orbital(orbital_arg), c, d);
      out << "word: " << r.word.str() << "\n";
      out << "moved: " << rat_str(c) << " -> " << rat_str(r.image) << " > " << rat_str(d)
          << "\n";
      return 0;
    }
    if (c_descend->parsed()) {
      GroupSession s = source.load(0);
      Tower t;
      std::istringstream in(tower_spec);
      std::string entry;
      while (std::getline(in, entry, ';')) {
        auto at = entry.find('@');
        if (at == std::string::npos)
          throw std::domain_error("tower entry must look like word@(lo,hi): '" + entry + "'");
        AstPtr ast = parse_word(entry.substr(0, at));
        t.entries.push_back(
            {parse_orbital(entry.substr(at + 1)), ast_to_word(ast), evaluate(ast, s)});
      }
      Tower d = tower_descent(t);
      out << "height " << d.height() << "\n";
      for (auto& e : d.entries) out << to_string(e.orbital) << " " << e.word.str() << "\n";
      out << "verified: ok\n";
      return 0;
    }
    if (c_dc->parsed()) {
      GroupSession s = source.load(0);
      DcReport r = dc_orbital_report(evaluate(word1, s), evaluate(word2, s));
      out << "point1: " << (r.inherited_orbitals_ok ? "pass" : "FAIL") << "\n";
      out << "point2: " << (r.confined_orbitals_ok ? "pass" : "FAIL") << "\n";
      out << "orbitals:";
      for (auto& a : r.f_orbitals) out << " " << to_string(a);
      out << "\n";
      return r.pass() ? 0 : 1;
    }
    if (c_meff->parsed()) {
      GroupSession s = source.load(0);
      auto [m, n] = mutual_efficiency_powers(evaluate(word1, s), evaluate(word2, s));
      out << "(" << m << ", " << n << ")\n";
      return 0;
    }
    if (c_plot->parsed()) {
      if (svg == tsv) throw std::domain_error("plot: pass exactly one of --svg or --tsv");
      GroupSession s = source.load(0);
      std::vector<std::pair<std::string, PLMap>> maps;
      for (auto& w : plot_words) maps.push_back({w, evaluate(w, s)});
      out << plot_emit(maps, svg ? PlotFormat::SVG : PlotFormat::TSV);
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "usage error: no command\n";
  return 2;
}

}  // namespace plgroup::cli
