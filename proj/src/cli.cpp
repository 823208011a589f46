#include "meshcide/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "meshcide/closure.hpp"
#include "meshcide/coincidence.hpp"
#include "meshcide/io.hpp"
#include "meshcide/partition.hpp"
#include "meshcide/render.hpp"

namespace meshcide::cli {

namespace {

struct Options {
  bool json = false;
  int threads = 0;
  int max_n = 0;
  bool list = false;
  bool closure = false;
  bool no_gamma = false;
  std::string out_file;
  std::string format;
  std::vector<std::string> args;
};

int parse_count(const std::string& token, const char* what, int lo, int hi) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || v < lo || v > hi)
    throw ParseError("invalid " + std::string(what) + " '" + token + "'; expected an integer in [" +
                     std::to_string(lo) + "," + std::to_string(hi) + "]");
  return v;
}

std::string squares_text(const Mesh& m) {
  std::string s;
  for (const MeshSquare& sq : m.squares()) s += to_string(sq);
  return s;
}

std::string point_text(const Permutation& p, int i) {
  return "(" + std::to_string(i) + "," + std::to_string(p(i)) + ")";
}

void print_steps(std::ostream& out, const std::vector<ProofStep>& steps, const Permutation& p,
                 const std::string& indent) {
  for (const ProofStep& step : steps) {
    out << indent << to_string(step.rule) << ' ' << to_string(MeshPattern(p, step.from));
    if (step.upper) {
      out << " <= " << to_string(MeshPattern(p, step.to)) << " <= "
          << to_string(MeshPattern(p, *step.upper)) << '\n';
      continue;
    }
    out << " ~ " << to_string(MeshPattern(p, step.to));
    if (step.move) {
      out << " by";
      for (const Shade& s : step.move->assignments)
        out << ' ' << to_string(s.direction) << '@' << point_text(p, s.point);
    }
    if (step.symmetry) {
      out << " under " << step.symmetry->name() << '\n';
      print_steps(out, step.nested, apply_symmetry(*step.symmetry, p), indent + "  ");
      continue;
    }
    out << '\n';
  }
}

void require_args(const Options& o, std::size_t n, const char* usage) {
  if (o.args.size() != n)
    throw ParseError(std::string("expected ") + std::to_string(n) + " argument(s): " + usage);
}

int depth_for(const Options& o, int k) { return o.max_n > 0 ? o.max_n : default_fingerprint_depth(k); }

void cmd_contains(const Options& o, std::ostream& out) {
  require_args(o, 2, "PATTERN PERM");
  const MeshPattern pi = parse_mesh_pattern(o.args[0]);
  const Permutation w = parse_permutation(o.args[1]);
  const auto occ = mesh_occurrences(pi, w);
  if (o.json) {
    out << json{{"contains", !occ.empty()}, {"occurrences", occ.size()}}.dump() << '\n';
  } else {
    out << (occ.empty() ? "false" : "true") << '\n' << "occurrences " << occ.size() << '\n';
  }
}

void cmd_occurrences(const Options& o, std::ostream& out) {
  require_args(o, 2, "PATTERN PERM");
  const MeshPattern pi = parse_mesh_pattern(o.args[0]);
  const Permutation w = parse_permutation(o.args[1]);
  const auto occ = mesh_occurrences(pi, w);
  if (o.json) {
    json arr = json::array();
    for (const Occurrence& x : occ) arr.push_back(x.positions);
    out << arr.dump() << '\n';
  } else {
    for (const Occurrence& x : occ) out << to_string(x) << '\n';
  }
}

void cmd_avoiders(const Options& o, std::ostream& out) {
  require_args(o, 2, "PATTERN N");
  const MeshPattern pi = parse_mesh_pattern(o.args[0]);
  const int n = parse_count(o.args[1], "length", 1, 11);
  if (o.list) {
    const auto av = avoiders(pi, n, o.threads);
    if (o.json) {
      json arr = json::array();
      for (const Permutation& w : av) arr.push_back(to_json(w));
      out << json{{"n", n}, {"count", av.size()}, {"avoiders", arr}}.dump() << '\n';
    } else {
      for (const Permutation& w : av) out << w.to_string() << '\n';
    }
    return;
  }
  const std::uint64_t count = count_avoiders(pi, n, o.threads);
  if (o.json) out << json{{"n", n}, {"count", count}}.dump() << '\n';
  else out << count << '\n';
}

void cmd_enc(const Options& o, std::ostream& out) {
  require_args(o, 1, "PATTERN");
  const auto diagonals = enclosed_diagonals(parse_mesh_pattern(o.args[0]));
  if (o.json) {
    json arr = json::array();
    for (const auto& d : diagonals) arr.push_back(to_json(d));
    out << arr.dump() << '\n';
  } else {
    for (const auto& d : diagonals) out << to_string(d) << '\n';
  }
}

void cmd_classify(const Options& o, std::ostream& out) {
  require_args(o, 1, "PATTERN");
  const MeshPattern pi = parse_mesh_pattern(o.args[0]);
  const FamilyTags t = classify_family(pi);
  const bool classical = is_coincident_with_classical(pi);
  if (o.json) {
    json j = to_json(t);
    j["classical"] = classical;
    out << j.dump() << '\n';
  } else {
    out << "vincular " << std::boolalpha << t.vincular << '\n'
        << "bivincular " << t.bivincular << '\n'
        << "isolating " << t.isolating << '\n'
        << "sparse " << t.sparse << '\n'
        << "classical " << classical << '\n';
  }
}

void cmd_shade(const Options& o, std::ostream& out) {
  require_args(o, 1, "PATTERN");
  const MeshPattern pi = parse_mesh_pattern(o.args[0]);
  if (o.closure) {
    const ClosureResult r = ssl_closure(pi.p, {pi.mesh});
    const auto& members = r.classes[*r.class_index(pi.mesh)];
    if (o.json) {
      json arr = json::array();
      for (const Mesh& m : members) arr.push_back(to_json(MeshPattern(pi.p, m)));
      out << json{{"complete", r.complete}, {"meshes", arr}}.dump() << '\n';
    } else {
      for (const Mesh& m : members) out << to_string(MeshPattern(pi.p, m)) << '\n';
      if (!r.complete) out << "(incomplete: mesh budget exhausted)\n";
    }
    return;
  }
  std::vector<Shade> shades = shadeable_singles(pi);
  for (const Shade& s : shadeable_pairs(pi)) shades.push_back(s);
  if (o.json) {
    json arr = json::array();
    for (const Shade& s : shades) {
      json j = to_json(s);
      j["point"][1] = pi.p(s.point);
      arr.push_back(j);
    }
    out << arr.dump() << '\n';
  } else {
    for (const Shade& s : shades)
      out << to_string(s.direction) << " at " << point_text(pi.p, s.point) << ": "
          << squares_text(s.squares) << '\n';
  }
}

CoincidenceVerdict decide(const Options& o) {
  require_args(o, 2, "PATTERN PATTERN");
  const MeshPattern a = parse_mesh_pattern(o.args[0]);
  const MeshPattern b = parse_mesh_pattern(o.args[1]);
  DecideOptions d;
  d.use_gamma = !o.no_gamma;
  d.threads = o.threads;
  return decide_coincidence(a, b, depth_for(o, std::max(a.k(), b.k())), d);
}

void print_witness(std::ostream& out, const Witness& w) {
  out << "witness " << w.w.to_string() << '\n'
      << (w.contains_first ? "contains the first pattern and avoids the second"
                           : "avoids the first pattern and contains the second")
      << '\n';
}

void cmd_coincident(const Options& o, std::ostream& out) {
  const CoincidenceVerdict v = decide(o);
  if (o.json) {
    out << to_json(v).dump() << '\n';
    return;
  }
  out << to_string(v.status) << '\n';
  if (v.witness) print_witness(out, *v.witness);
  if (v.trace) print_steps(out, v.trace->steps, v.trace->p, "  ");
  if (v.status == Status::Undecided) out << "fingerprints agree up to length " << v.depth << '\n';
}

void cmd_witness(const Options& o, std::ostream& out) {
  const CoincidenceVerdict v = decide(o);
  if (o.json) {
    json j{{"status", to_string(v.status)}, {"depth", v.depth}, {"witness", nullptr}};
    if (v.witness) {
      j["witness"] = to_json(v.witness->w);
      j["contains_first"] = v.witness->contains_first;
    }
    out << j.dump() << '\n';
  } else if (v.witness) {
    print_witness(out, *v.witness);
  } else {
    out << "none (" << to_string(v.status) << ")\n";
  }
}

Partition load_or_compute(const Options& o, const Permutation& p, const PartitionOptions& po) {
  if (!o.out_file.empty()) {
    std::ifstream in(o.out_file);
    if (in) {
      Partition cached = read_partition(in, o.threads);
      if (cached.p == p && cached.n_max == po.n_max && cached.use_gamma == po.use_gamma)
        return cached;
    }
  }
  Partition computed = partition_meshes(p, po);
  if (!o.out_file.empty()) {
    std::ofstream file(o.out_file);
    if (!file) throw std::runtime_error("cannot write '" + o.out_file + "'");
    write_partition(file, computed);
  }
  return computed;
}

void cmd_partition(const Options& o, std::ostream& out) {
  require_args(o, 1, "PERM");
  const Permutation p = parse_permutation(o.args[0]);
  PartitionOptions po;
  po.n_max = o.max_n > 0 ? o.max_n : default_partition_depth(p.size());
  po.use_gamma = !o.no_gamma;
  po.threads = o.threads;
  const Partition part = load_or_compute(o, p, po);
  if (o.json) {
    write_partition(out, part);
    return;
  }
  out << "p " << p.to_string() << " depth " << part.n_max << " classes " << part.classes.size()
      << " proven " << part.proven_count() << " conjectured " << part.conjectured_count()
      << " undecided-pairs " << part.undecided_pairs() << '\n';
  if (part.soundness_violations > 0)
    out << "soundness violations " << part.soundness_violations << '\n';
  for (const MeshClass& c : part.classes) {
    if (c.proven()) continue;
    out << "CONJECTURED " << to_string(MeshPattern(p, c.representative())) << " size "
        << c.meshes.size() << '\n';
    for (const auto& block : c.blocks) {
      out << "  block";
      for (const Mesh& m : block) out << ' ' << to_string(MeshPattern(p, m));
      out << '\n';
    }
  }
}

void cmd_render(const Options& o, std::ostream& out) {
  require_args(o, 1, "PATTERN");
  const MeshPattern pi = parse_mesh_pattern(o.args[0]);
  const std::string format = !o.format.empty() ? o.format : o.json ? "json" : "ascii";
  out << render(pi, parse_render_format(format));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mesh pattern containment, shading and coincidence", "meshcide"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Emit JSON");
  app.add_option("--threads", o.threads, "Worker threads (default: $MESHCIDE_THREADS or all cores)")
      ->check(CLI::NonNegativeNumber);

  struct Verb {
    const char* name;
    const char* help;
    void (*body)(const Options&, std::ostream&);
  };
  const Verb verbs[] = {
      {"contains", "Does PERM contain PATTERN", cmd_contains},
      {"occurrences", "Occurrences of PATTERN in PERM", cmd_occurrences},
      {"avoiders", "Count (or --list) avoiders of PATTERN of length N", cmd_avoiders},
      {"enc", "Enclosed diagonals of PATTERN", cmd_enc},
      {"classify", "Family tags of PATTERN", cmd_classify},
      {"shade", "Shadeable squares and pairs of PATTERN", cmd_shade},
      {"coincident", "Decide coincidence of two patterns", cmd_coincident},
      {"witness", "A permutation separating two patterns", cmd_witness},
      {"partition", "Coincidence classes of all meshes over PERM", cmd_partition},
      {"render", "Draw PATTERN", cmd_render},
  };
  void (*chosen)(const Options&, std::ostream&) = nullptr;
  for (const Verb& v : verbs) {
    CLI::App* sub = app.add_subcommand(v.name, v.help);
    sub->fallthrough();
    sub->add_option("args", o.args, "Patterns, permutations and lengths");
    sub->callback([&chosen, body = v.body] { chosen = body; });
    const std::string name = v.name;
    if (name == "coincident" || name == "witness" || name == "partition")
      sub->add_option("--max-n", o.max_n, "Fingerprint depth")->check(CLI::Range(1, 10));
    if (name == "coincident" || name == "witness" || name == "partition")
      sub->add_flag("--no-gamma", o.no_gamma, "Disable the gamma rule");
    if (name == "avoiders") sub->add_flag("--list", o.list, "List the avoiders");
    if (name == "shade") sub->add_flag("--closure", o.closure, "Meshes reachable by shading");
    if (name == "partition") sub->add_option("--out", o.out_file, "Partition cache file");
    if (name == "render") sub->add_option("--format", o.format, "ascii, tikz or json");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    chosen(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace meshcide::cli
