#include <chordsl2/cli.hpp>

#include <chordsl2/cfraction.hpp>
#include <chordsl2/diagram.hpp>
#include <chordsl2/genocchi.hpp>
#include <chordsl2/identities.hpp>
#include <chordsl2/kreweras.hpp>
#include <chordsl2/weights.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace chordsl2::cli {

using nlohmann::json;

namespace {

struct UsageError : Error {
  using Error::Error;
};

json poly_record(const IntPoly &p) {
  return {{"text", to_string(p)}, {"coefficients", to_decimal_strings(p)}};
}

json pairs_json(const ChordDiagram &d) { return diagram_to_json(d); }

std::string csv_quote(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + "\"";
}

class CacheSession {
public:
  explicit CacheSession(const CliConfig &cfg)
      : path_(cfg.inject_sign_flip ? std::nullopt : cfg.cache_path),
        cache_(WeightOptions{KeyMode::dihedral, true, cfg.inject_sign_flip}) {
    if (path_ && std::filesystem::exists(*path_))
      stats_ = cache_.load_file(*path_);
  }
  WeightCache &cache() { return cache_; }
  const CacheLoadStats &stats() const { return stats_; }
  void persist() const {
    if (path_)
      cache_.save_file(*path_);
  }

private:
  std::optional<std::filesystem::path> path_;
  WeightCache cache_;
  CacheLoadStats stats_;
};

void check_order(const CliConfig &cfg, int n) {
  if (n > cfg.max_order)
    throw BoundExceeded("order " + std::to_string(n) + " exceeds --max-order " +
                        std::to_string(cfg.max_order));
}

Family parse_family(const std::string &s) {
  if (s == "D")
    return Family::D;
  if (s == "A")
    return Family::A;
  if (s == "B")
    return Family::B;
  throw UsageError("unknown family " + s);
}

CliResult cmd_phi(const CliConfig &cfg) {
  const ChordDiagram d = parse_diagram(cfg.diagram);
  check_order(cfg, d.order());
  CacheSession session(cfg);
  const IntPoly w = phi(d, session.cache());
  session.persist();
  std::ostringstream out;
  switch (cfg.format) {
  case Format::text:
    out << to_string(w) << '\n';
    break;
  case Format::json:
    out << json{{"diagram", pairs_json(d)}, {"weight", poly_record(w)}}.dump(2) << '\n';
    break;
  case Format::csv:
    out << "diagram,weight\n" << csv_quote(format_diagram(d)) << ',' << csv_quote(to_string(w))
        << '\n';
    break;
  }
  return {exit_ok, out.str(), {}};
}

CliResult cmd_family(const CliConfig &cfg) {
  const Family kind = parse_family(cfg.family);
  if (cfg.n < 0)
    throw UsageError("--n must be nonnegative");
  check_order(cfg, cfg.n);
  std::vector<int> ks;
  if (kind == Family::D)
    ks = {0};
  else if (cfg.k)
    ks = {*cfg.k};
  else
    for (int k = 0; k <= cfg.n - 1; ++k)
      ks.push_back(k);
  CacheSession session(cfg);
  std::vector<std::pair<int, IntPoly>> rows;
  for (int k : ks)
    rows.emplace_back(k, family_weight(kind, cfg.n, k, session.cache()));
  session.persist();
  std::ostringstream out;
  auto label = [&](int k) {
    return kind == Family::D ? "D(" + std::to_string(cfg.n) + ")"
                             : cfg.family + "(" + std::to_string(cfg.n) + "," +
                                   std::to_string(k) + ")";
  };
  if (cfg.format == Format::json) {
    json arr = json::array();
    for (const auto &[k, w] : rows) {
      json rec{{"family", cfg.family}, {"n", cfg.n}, {"weight", poly_record(w)}};
      if (kind != Family::D)
        rec["k"] = k;
      arr.push_back(std::move(rec));
    }
    out << arr.dump(2) << '\n';
  } else if (cfg.format == Format::csv) {
    out << "family,n,k,weight\n";
    for (const auto &[k, w] : rows)
      out << cfg.family << ',' << cfg.n << ',' << (kind == Family::D ? "" : std::to_string(k))
          << ',' << csv_quote(to_string(w)) << '\n';
  } else {
    for (const auto &[k, w] : rows)
      out << label(k) << " = " << to_string(w) << '\n';
  }
  return {exit_ok, out.str(), {}};
}

template <class Cell>
std::string render_rows(const CliConfig &cfg, const std::vector<std::vector<Cell>> &rows,
                        const std::function<std::string(const Cell &)> &text,
                        const std::function<json(const Cell &)> &js, const char *sep) {
  std::ostringstream out;
  if (cfg.format == Format::json) {
    json arr = json::array();
    for (const auto &r : rows) {
      json row = json::array();
      for (const auto &c : r)
        row.push_back(js(c));
      arr.push_back(std::move(row));
    }
    out << arr.dump(2) << '\n';
  } else if (cfg.format == Format::csv) {
    out << "row,index,value\n";
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows[i].size(); ++j)
        out << i + 1 << ',' << j + 1 << ',' << csv_quote(text(rows[i][j])) << '\n';
  } else {
    for (const auto &r : rows) {
      for (std::size_t j = 0; j < r.size(); ++j)
        out << (j ? sep : "") << text(r[j]);
      out << '\n';
    }
  }
  return out.str();
}

CliResult cmd_table(const CliConfig &cfg) {
  if (cfg.rows < 1)
    throw UsageError("--rows must be positive");
  const std::function<std::string(const Integer &)> int_text = [](const Integer &v) {
    return v.str();
  };
  const std::function<json(const Integer &)> int_json = [](const Integer &v) {
    return json(v.str());
  };
  std::vector<std::vector<Integer>> ints;
  if (cfg.table == "seidel") {
    const SeidelTriangle g(cfg.rows);
    for (int i = 1; i <= cfg.rows; ++i) {
      std::vector<Integer> col;
      for (int j = 1; j <= SeidelTriangle::height(i); ++j)
        col.push_back(g(i, j));
      ints.push_back(std::move(col));
    }
    return {exit_ok, render_rows(cfg, ints, int_text, int_json, " "), {}};
  }
  if (cfg.table == "kreweras") {
    const KrewerasIntTriangle h(cfg.rows);
    for (int n = 1; n <= cfg.rows; ++n)
      ints.push_back(h.row(n));
    return {exit_ok, render_rows(cfg, ints, int_text, int_json, " "), {}};
  }
  if (cfg.table == "K") {
    const KrewerasPolyTriangle K(cfg.rows);
    std::vector<std::vector<IntPoly>> polys;
    for (int n = 1; n <= cfg.rows; ++n)
      polys.push_back(K.row(n));
    const std::function<std::string(const IntPoly &)> text = [](const IntPoly &p) {
      return to_string(p);
    };
    const std::function<json(const IntPoly &)> js = [](const IntPoly &p) {
      return poly_record(p);
    };
    return {exit_ok, render_rows(cfg, polys, text, js, "  |  "), {}};
  }
  throw UsageError("unknown table " + cfg.table);
}

CliResult cmd_verify(const CliConfig &cfg) {
  if (cfg.max_n < 1)
    throw UsageError("--max-n must be positive");
  check_order(cfg, cfg.max_n);
  CacheSession session(cfg);
  ReportBudget budget{cfg.max_n, std::max(cfg.max_n, 1), cfg.threads,
                      cfg.include_continued_fraction};
  const auto reports = full_report(budget, session.cache());
  session.persist();
  const bool ok = all_pass(reports);
  std::ostringstream out;
  if (cfg.format == Format::json) {
    out << to_json(reports).dump(2) << '\n';
  } else if (cfg.format == Format::csv) {
    out << "name,params,status,millis\n";
    for (const auto &r : reports)
      out << r.name << ',' << csv_quote(r.params.dump()) << ',' << (r.pass ? "pass" : "fail")
          << ',' << r.millis << '\n';
  } else {
    std::size_t failed = 0;
    for (const auto &r : reports) {
      out << (r.pass ? "PASS " : "FAIL ") << r.name << ' ' << r.params.dump() << '\n';
      if (r.witness) {
        ++failed;
        out << "  witness " << r.witness->params.dump() << "\n  lhs = " << to_string(r.witness->lhs)
            << "\n  rhs = " << to_string(r.witness->rhs) << '\n';
        if (!r.witness->note.empty())
          out << "  " << r.witness->note << '\n';
      }
    }
    out << reports.size() - failed << '/' << reports.size() << " checks passed\n";
  }
  return {ok ? exit_ok : exit_check_failed, out.str(), {}};
}

CliResult cmd_cf(const CliConfig &cfg) {
  if (cfg.order < 0)
    throw UsageError("--order must be nonnegative");
  const auto order = static_cast<std::size_t>(cfg.order);
  PolySeries s(order);
  if (cfg.weights == "conj2") {
    const WeightPair w = complete_diagram_weights();
    s = jfraction_series({w.b, w.lam, order});
  } else if (cfg.weights == "unit") {
    const WeightPair w = unit_weights();
    s = jfraction_series({w.b, w.lam, order});
  } else if (cfg.weights == "hn") {
    s = sfraction_series(hn_sfraction_pattern(order), order);
  } else {
    throw UsageError("unknown weights " + cfg.weights);
  }
  std::ostringstream out;
  if (cfg.format == Format::json) {
    json arr = json::array();
    for (std::size_t n = 0; n <= order; ++n)
      arr.push_back({{"n", n}, {"coefficients", to_decimal_strings(s[n])}});
    out << arr.dump(2) << '\n';
  } else if (cfg.format == Format::csv) {
    out << "n,coefficient\n";
    for (std::size_t n = 0; n <= order; ++n)
      out << n << ',' << csv_quote(to_string(s[n])) << '\n';
  } else {
    for (std::size_t n = 0; n <= order; ++n)
      out << "t^" << n << ": " << to_string(s[n]) << '\n';
  }
  return {exit_ok, out.str(), {}};
}

CliResult cmd_enumerate(const CliConfig &cfg) {
  if (cfg.n < 0)
    throw UsageError("--n must be nonnegative");
  struct Entry {
    ChordDiagram rep;
    std::size_t size;
  };
  std::vector<Entry> entries;
  std::map<CanonicalKey, std::size_t> seen;
  for_each_diagram(
      cfg.n,
      [&](const ChordDiagram &d) {
        if (!cfg.classes) {
          entries.push_back({d, 1});
          return;
        }
        const auto [it, fresh] = seen.emplace(canonical_key(d), entries.size());
        if (fresh)
          entries.push_back({d, 1});
        else
          ++entries[it->second].size;
      },
      cfg.enumeration_bound);
  std::ostringstream out;
  if (cfg.format == Format::json) {
    json arr = json::array();
    for (const auto &e : entries) {
      json rec{{"pairs", pairs_json(e.rep)}};
      if (cfg.classes)
        rec["class_size"] = e.size;
      arr.push_back(std::move(rec));
    }
    out << arr.dump(2) << '\n';
  } else if (cfg.format == Format::csv) {
    out << (cfg.classes ? "diagram,class_size\n" : "diagram\n");
    for (const auto &e : entries) {
      out << csv_quote(format_diagram(e.rep));
      if (cfg.classes)
        out << ',' << e.size;
      out << '\n';
    }
  } else {
    for (const auto &e : entries) {
      out << format_diagram(e.rep);
      if (cfg.classes)
        out << "  x" << e.size;
      out << '\n';
    }
    out << entries.size() << (cfg.classes ? " classes\n" : " diagrams\n");
  }
  return {exit_ok, out.str(), {}};
}

CliResult cmd_cache(const CliConfig &cfg) {
  if (!cfg.cache_path)
    throw UsageError(std::string("cache commands need --cache or ") + cache_env_var);
  CacheSession session(cfg);
  std::ostringstream out;
  if (cfg.cache_action == "stats") {
    const auto &st = session.stats();
    if (cfg.format == Format::json)
      out << json{{"path", cfg.cache_path->string()},
                  {"entries", session.cache().size()},
                  {"rejected", st.rejected}}
                 .dump(2)
          << '\n';
    else if (cfg.format == Format::csv)
      out << "path,entries,rejected\n"
          << csv_quote(cfg.cache_path->string()) << ',' << session.cache().size() << ','
          << st.rejected << '\n';
    else
      out << cfg.cache_path->string() << ": " << session.cache().size() << " entries, "
          << st.rejected << " rejected lines\n";
    return {exit_ok, out.str(), {}};
  }
  if (cfg.cache_file.empty())
    throw UsageError("cache " + cfg.cache_action + " needs a path");
  if (cfg.cache_action == "export") {
    session.cache().save_file(cfg.cache_file);
    out << "exported " << session.cache().size() << " entries\n";
    return {exit_ok, out.str(), {}};
  }
  if (cfg.cache_action == "import") {
    const CacheLoadStats st = session.cache().load_file(cfg.cache_file);
    session.persist();
    out << "imported " << st.accepted << " entries, rejected " << st.rejected << '\n';
    return {exit_ok, out.str(), {}};
  }
  throw UsageError("unknown cache action " + cfg.cache_action);
}

} // namespace

CliResult run(const CliConfig &config) {
  try {
    switch (config.command) {
    case Command::phi:
      return cmd_phi(config);
    case Command::family:
      return cmd_family(config);
    case Command::table:
      return cmd_table(config);
    case Command::verify:
      return cmd_verify(config);
    case Command::cf:
      return cmd_cf(config);
    case Command::enumerate:
      return cmd_enumerate(config);
    case Command::cache:
      return cmd_cache(config);
    }
    return {exit_usage, {}, "unknown command\n"};
  } catch (const std::exception &e) {
    return {exit_usage, {}, std::string("error: ") + e.what() + '\n'};
  }
}

CliResult run_args(const std::vector<std::string> &args, const char *env_cache) {
  CliConfig cfg;
  CLI::App app{"Exact sl2 chord diagram weights, Kreweras triangles and continued fractions",
               "chordsl2"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::string format = "text";
  std::string cache_path;
  app.add_option("--format", format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--cache", cache_path, "weight cache file");
  app.add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--max-order", cfg.max_order, "largest diagram order to expand");

  auto *phi_cmd = app.add_subcommand("phi", "weight of a diagram given as 1-based pairs");
  phi_cmd->add_option("pairs", cfg.diagram, "e.g. 1-4,2-5,3-6")->required();

  auto *family_cmd = app.add_subcommand("family", "weights of the D, A and B families");
  family_cmd->add_option("kind", cfg.family)->required()->check(CLI::IsMember({"D", "A", "B"}));
  family_cmd->add_option("--n", cfg.n)->required();
  int k = 0;
  auto *k_opt = family_cmd->add_option("--k", k);

  auto *table_cmd = app.add_subcommand("table", "Seidel, Kreweras or polynomial Kreweras table");
  table_cmd->add_option("which", cfg.table)
      ->required()
      ->check(CLI::IsMember({"seidel", "kreweras", "K"}));
  table_cmd->add_option("--rows", cfg.rows);

  auto *verify_cmd = app.add_subcommand("verify", "run the identity checks");
  verify_cmd->add_option("--max-n", cfg.max_n);
  std::vector<std::string> include;
  verify_cmd->add_option("--include", include)->check(CLI::IsMember({"conj2"}));

  auto *cf_cmd = app.add_subcommand("cf", "continued fraction expansions");
  cf_cmd->add_option("--order", cfg.order);
  cf_cmd->add_option("--weights", cfg.weights)->check(CLI::IsMember({"conj2", "unit", "hn"}));

  auto *enum_cmd = app.add_subcommand("enumerate", "list n-chord diagrams");
  enum_cmd->add_option("--n", cfg.n)->required();
  enum_cmd->add_flag("--classes", cfg.classes, "one line per dihedral class");

  auto *cache_cmd = app.add_subcommand("cache", "inspect or move the weight cache");
  cache_cmd->add_option("action", cfg.cache_action)
      ->required()
      ->check(CLI::IsMember({"stats", "export", "import"}));
  std::string cache_file;
  cache_cmd->add_option("path", cache_file);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    return {code == 0 ? exit_ok : exit_usage, out.str(), err.str()};
  }

  cfg.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;
  if (!cache_path.empty())
    cfg.cache_path = cache_path;
  else if (env_cache && *env_cache)
    cfg.cache_path = env_cache;
  if (*k_opt)
    cfg.k = k;
  cfg.include_continued_fraction = !include.empty();
  cfg.cache_file = cache_file;

  if (phi_cmd->parsed())
    cfg.command = Command::phi;
  else if (family_cmd->parsed())
    cfg.command = Command::family;
  else if (table_cmd->parsed())
    cfg.command = Command::table;
  else if (verify_cmd->parsed())
    cfg.command = Command::verify;
  else if (cf_cmd->parsed())
    cfg.command = Command::cf;
  else if (enum_cmd->parsed())
    cfg.command = Command::enumerate;
  else
    cfg.command = Command::cache;
  return run(cfg);
}

} // namespace chordsl2::cli
