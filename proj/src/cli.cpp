#include "braidshadow/cli.hpp"

#include <functional>
#include <iomanip>
#include <ostream>

#include <CLI11.hpp>
#include <omp.h>

#include "braidshadow/cache.hpp"
#include "braidshadow/config.hpp"
#include "braidshadow/error.hpp"
#include "braidshadow/io.hpp"

namespace braidshadow {

namespace {

using io::Json;

struct Options {
  std::string json_path;
  std::string cache_dir;
  bool no_cache = false;
  std::size_t max_group_size = Config{}.max_group_size;
  std::size_t max_candidates = Config{}.max_candidates;
  int max_degree = 4;
  int threads = 0;

  std::vector<std::string> files;
  std::int64_t m = 0;
  std::string f;
  std::string out_dir;
};

class Session {
public:
  Session(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {
    if (!opt.no_cache) cache_ = ResultCache(resolve_cache_dir(opt.cache_dir));
  }

  // Looks the result up in the cache, computing and storing it on a miss.
  Json cached(const std::vector<std::string>& key_parts, const std::function<Json()>& compute) {
    const std::string key = ResultCache::make_key(key_parts);
    if (auto hit = cache_.get(key)) return *hit;
    Json doc = compute();
    cache_.put(key, doc);
    return doc;
  }

  void emit_json(const Json& doc) {
    if (opt_.json_path.empty()) return;
    io::write_file_atomic(opt_.json_path, io::dump(doc));
    out_ << "wrote " << opt_.json_path << "\n";
  }

  NfiSubgroup load(std::size_t i) const {
    if (i >= opt_.files.size()) throw Error(Errc::parse_error, "missing subgroup file argument");
    return io::load_subgroup(opt_.files[i]);
  }

  GtShadow shadow_on(const NfiSubgroup& n) const {
    return make_shadow(n, opt_.m, parse_word(Alphabet::F2, opt_.f));
  }

  std::string shadow_key() const { return std::to_string(opt_.m) + "|" + opt_.f; }

  const Options& opt() const { return opt_; }
  std::ostream& out() { return out_; }

private:
  const Options& opt_;
  std::ostream& out_;
  ResultCache cache_;
};

std::string shadow_text(const Json& s) {
  return "[" + std::to_string(s["m"].get<std::int64_t>()) + ", " +
         (s["f"].get<std::string>().empty() ? std::string("1") : s["f"].get<std::string>()) + "]";
}

void print_summary(std::ostream& out, const Json& s) {
  out << "label       " << s["label"].get<std::string>() << "\n"
      << "content_id  " << s["content_id"].get<std::string>() << "\n"
      << "degree      " << s["degree"] << "\n"
      << "N_ord=" << s["n_ord"] << "\n"
      << "|B3/N|=" << s["index_b3"] << "\n"
      << "|PB3:N|=" << s["index_pb3"] << "\n"
      << "|F2:N_F2|=" << s["index_f2"] << "\n"
      << "|[F2/N_F2, F2/N_F2]|=" << s["commutator_order"] << "\n";
}

void print_shadow_table(std::ostream& out, const Json& shadows) {
  out << std::left << std::setw(6) << "m" << std::setw(40) << "f" << "source\n";
  for (const auto& s : shadows) {
    const std::string f = s["f"].get<std::string>();
    out << std::left << std::setw(6) << s["m"].get<std::int64_t>() << std::setw(40)
        << (f.empty() ? std::string("1") : f) << s["source_label"].get<std::string>() << "\n";
  }
}

int cmd_validate(Session& ses) {
  const NfiSubgroup n = ses.load(0);
  ses.out() << "valid: " << n.label() << " (degree " << n.degree() << ", |B3/N|=" << n.index_b3()
            << ")\n";
  ses.emit_json(io::subgroup_to_json(n));
  return kExitOk;
}

int cmd_info(Session& ses) {
  const NfiSubgroup n = ses.load(0);
  const Json doc = ses.cached({"info", n.content_id(), n.label()},
                              [&] { return io::quotient_summary(n); });
  print_summary(ses.out(), doc);
  ses.emit_json(doc);
  return kExitOk;
}

int cmd_shadows(Session& ses) {
  const NfiSubgroup n = ses.load(0);
  const Json doc = ses.cached({"shadows", n.content_id(), n.label()}, [&] {
    return io::shadow_set_to_json(n, enumerate_shadows(n));
  });
  ses.out() << "GT(" << doc["target"].get<std::string>() << "): " << doc["shadows"].size()
            << " shadows, N_ord=" << doc["n_ord"] << "\n";
  print_shadow_table(ses.out(), doc["shadows"]);
  ses.emit_json(doc);
  return kExitOk;
}

void print_component(std::ostream& out, const Json& doc) {
  out << "component of " << doc["start"].get<std::string>() << ": " << doc["object_count"]
      << " objects, " << doc["morphism_count"] << " morphisms, "
      << (doc["isolated"].get<bool>() ? "isolated" : "not isolated") << "\n";
  out << std::left << std::setw(6) << "#" << std::setw(28) << "label" << std::setw(20)
      << "content_id" << "|PB3:N| N_ord |F2:N_F2|\n";
  std::size_t i = 0;
  for (const auto& o : doc["objects"]) {
    const auto& s = o["summary"];
    out << std::left << std::setw(6) << i++ << std::setw(28) << o["label"].get<std::string>()
        << std::setw(20) << s["content_id"].get<std::string>() << s["index_pb3"] << " "
        << s["n_ord"] << " " << s["index_f2"] << "\n";
  }
  for (const auto& m : doc["morphisms"]) {
    out << "  " << m["source"] << " -> " << m["target"] << ": " << m["count"] << "\n";
  }
  out << "diamond degree " << doc["diamond"]["degree"] << "\n";
}

int cmd_component(Session& ses) {
  const NfiSubgroup n = ses.load(0);
  const Json doc = ses.cached({"component", n.content_id(), n.label()}, [&] {
    return io::component_to_json(connected_component(n));
  });
  print_component(ses.out(), doc);
  ses.emit_json(doc);
  return kExitOk;
}

int cmd_diamond(Session& ses) {
  const NfiSubgroup n = ses.load(0);
  const Json doc = ses.cached({"diamond", n.content_id(), n.label()},
                              [&] { return io::subgroup_to_json(diamond(n)); });
  const NfiSubgroup d = io::subgroup_from_json(doc);
  ses.out() << "diamond of " << n.label() << ": degree " << d.degree() << ", |B3/N|="
            << d.index_b3() << ", isolated\n";
  ses.emit_json(doc);
  return kExitOk;
}

int cmd_reduce(Session& ses) {
  const NfiSubgroup n = ses.load(0);
  const NfiSubgroup h = ses.load(1);
  const GtShadow s = ses.shadow_on(n);
  const GtShadow r = reduce_shadow(s, h);
  const Json doc{{"from", n.label()},
                 {"to", h.label()},
                 {"shadow", io::shadow_to_json(s, io::default_source_label(s))},
                 {"reduced", io::shadow_to_json(r, io::default_source_label(r))}};
  ses.out() << shadow_text(doc["shadow"]) << " in GT(" << n.label() << ") reduces to "
            << shadow_text(doc["reduced"]) << " in GT(" << h.label() << ")\n";
  ses.emit_json(doc);
  return kExitOk;
}

int cmd_survive(Session& ses) {
  const NfiSubgroup h = ses.load(0);
  const NfiSubgroup n = ses.load(1);
  const GtShadow s = ses.shadow_on(h);
  const Json doc = ses.cached({"survive", h.content_id(), n.content_id(), ses.shadow_key(),
                               h.label(), n.label()},
                              [&] {
                                return Json{{"target", h.label()},
                                            {"into", n.label()},
                                            {"shadow", io::shadow_to_json(
                                                           s, io::default_source_label(s))},
                                            {"survives", survives(s, n)}};
                              });
  ses.out() << shadow_text(doc["shadow"]) << " in GT(" << h.label() << ") "
            << (doc["survives"].get<bool>() ? "survives" : "does not survive") << " into "
            << n.label() << "\n";
  ses.emit_json(doc);
  return kExitOk;
}

int cmd_genuine(Session& ses) {
  const NfiSubgroup h = ses.load(0);
  const GtShadow s = ses.shadow_on(h);
  const int d = ses.opt().max_degree;
  const Json doc = ses.cached(
      {"genuine", h.content_id(), h.label(), ses.shadow_key(), std::to_string(d)}, [&] {
        const auto catalog = catalog_search(d);
        return io::verdict_to_json(s, genuine_to_depth(s, catalog));
      });
  ses.out() << shadow_text(doc["shadow"]) << " in GT(" << h.label() << "): "
            << doc["verdict"].get<std::string>() << " (catalog degree <= " << d << ", "
            << doc["checked"].size() << " subgroups checked)\n";
  if (doc.contains("witness")) {
    ses.out() << "witness " << doc["witness"]["label"].get<std::string>() << ", image of size "
              << doc["reduce_image"].size() << "\n";
  }
  ses.emit_json(doc);
  return kExitOk;
}

int cmd_catalog(Session& ses) {
  const int d = ses.opt().max_degree;
  const Json doc = ses.cached({"catalog", std::to_string(d)}, [&] {
    const auto catalog = catalog_search(d);
    return io::catalog_to_json(catalog, d);
  });
  ses.out() << "catalog up to degree " << d << ": " << doc["count"] << " kernels\n";
  ses.out() << std::left << std::setw(8) << "label" << std::setw(8) << "degree" << std::setw(8)
            << "|PB3:N|" << std::setw(7) << "N_ord" << std::setw(10) << "|F2:N_F2|"
            << "|GT(N)|\n";
  for (const auto& o : doc["objects"]) {
    const auto& s = o["summary"];
    ses.out() << std::left << std::setw(8) << o["label"].get<std::string>() << std::setw(8)
              << o["degree"].get<std::size_t>() << std::setw(8) << s["index_pb3"].get<std::size_t>()
              << std::setw(7) << s["n_ord"].get<std::size_t>() << std::setw(10)
              << s["index_f2"].get<std::size_t>() << s["gt_count"].get<std::size_t>() << "\n";
  }
  if (!ses.opt().out_dir.empty()) {
    for (const auto& o : doc["objects"]) {
      Json sub = o;
      sub.erase("summary");
      io::write_file_atomic(std::filesystem::path(ses.opt().out_dir) /
                                (o["label"].get<std::string>() + ".json"),
                            io::dump(sub));
    }
    ses.out() << "wrote " << doc["count"] << " subgroup files to " << ses.opt().out_dir << "\n";
  }
  ses.emit_json(doc);
  return kExitOk;
}

int cmd_mainline(Session& ses) {
  std::vector<NfiSubgroup> objects;
  std::vector<std::string> key{"mainline"};
  if (ses.opt().files.empty()) {
    key.push_back("catalog:" + std::to_string(ses.opt().max_degree));
  } else {
    for (std::size_t i = 0; i < ses.opt().files.size(); ++i) {
      objects.push_back(ses.load(i));
      key.push_back(objects.back().content_id() + ":" + objects.back().label());
    }
  }
  const Json doc = ses.cached(key, [&] {
    if (objects.empty()) {
      for (const auto& n : catalog_search(ses.opt().max_degree)) {
        if (is_isolated(n)) objects.push_back(n);
      }
    }
    return io::mainline_to_json(main_line_limit(objects));
  });
  ses.out() << "main line over " << doc["objects"].size() << " isolated objects, "
            << doc["edges"].size() << " edges\n";
  for (const auto& o : doc["objects"]) {
    ses.out() << "  " << std::left << std::setw(10) << o["label"].get<std::string>()
              << "|GT(N)|=" << o["gt_count"] << "\n";
  }
  ses.out() << "limit size " << doc["limit_size"] << "\n";
  ses.emit_json(doc);
  return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"GT-shadows over finite quotients of B3", "braidshadow"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--json", opt.json_path, "Write the machine-readable result to this file");
  app.add_option("--cache-dir", opt.cache_dir, "Result cache directory");
  app.add_flag("--no-cache", opt.no_cache, "Neither read nor write the result cache");
  app.add_option("--max-group-size", opt.max_group_size, "Cap on enumerated group orders")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-candidates", opt.max_candidates, "Cap on the (m, f) candidate grid")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-degree", opt.max_degree, "Catalog degree bound")
      ->check(CLI::Range(1, 8));
  app.add_option("--threads", opt.threads, "OpenMP thread count (0 = runtime default)")
      ->check(CLI::NonNegativeNumber);

  using Handler = int (*)(Session&);
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto with_files = [&](const char* name, const char* help, int count, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("files", opt.files, "Subgroup JSON file(s)")->expected(count)->required();
    commands.emplace_back(sub, h);
    return sub;
  };
  auto with_shadow = [&](CLI::App* sub) {
    sub->add_option("--m", opt.m, "The m component of the shadow");
    sub->add_option("--f", opt.f, "The f component as a word in x, y, X, Y");
  };
  with_files("validate", "Check a subgroup file", 1, cmd_validate);
  with_files("info", "Quotient invariants of a subgroup", 1, cmd_info);
  with_files("shadows", "Enumerate GT(N)", 1, cmd_shadows);
  with_files("component", "Connected component of N in the groupoid", 1, cmd_component);
  with_files("diamond", "Intersection of the component of N", 1, cmd_diamond);
  with_shadow(with_files("reduce", "Reduce [m, f] from N to H (files: N H)", 2, cmd_reduce));
  with_shadow(
      with_files("survive", "Does [m, f] in GT(H) survive into N (files: H N)", 2, cmd_survive));
  with_shadow(with_files("genuine", "Search the catalog for a fakeness witness", 1, cmd_genuine));
  CLI::App* catalog = app.add_subcommand("catalog", "Enumerate kernels of small degree");
  catalog->add_option("--out-dir", opt.out_dir, "Also write one subgroup file per kernel");
  commands.emplace_back(catalog, cmd_catalog);
  CLI::App* mainline = app.add_subcommand("mainline", "Main line diagram and its limit");
  mainline->add_option("files", opt.files, "Isolated subgroup files (default: catalog)");
  commands.emplace_back(mainline, cmd_mainline);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Config cfg = config();
  cfg.max_group_size = opt.max_group_size;
  cfg.max_candidates = opt.max_candidates;
  cfg.max_catalog_degree = std::max(cfg.max_catalog_degree, opt.max_degree);
  ScopedConfig scoped(cfg);
  if (opt.threads > 0) omp_set_num_threads(opt.threads);

  try {
    Session ses(opt, out);
    for (const auto& [sub, handler] : commands) {
      if (sub->parsed()) return handler(ses);
    }
    err << "error: no subcommand\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.is_input_error() ? kExitUsage : kExitDomain;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed document: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace braidshadow
