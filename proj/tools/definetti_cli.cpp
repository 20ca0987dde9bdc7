// Command-line front end over the definetti C API.
//
// Exit status: 0 pass, 1 definite failure, 2 inconclusive, 3 input error.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "definetti/definetti.h"

namespace {

constexpr int kExitInputError = 3;

struct Failure {
  std::string message;
};

struct TableHandle {
  dft_table* p = nullptr;
  TableHandle() = default;
  TableHandle(const TableHandle&) = delete;
  TableHandle& operator=(const TableHandle&) = delete;
  ~TableHandle() { dft_table_free(p); }
};

struct ReportHandle {
  dft_report* p = nullptr;
  ReportHandle() = default;
  ReportHandle(const ReportHandle&) = delete;
  ReportHandle& operator=(const ReportHandle&) = delete;
  ~ReportHandle() { dft_report_free(p); }
};

void check(dft_status status) {
  if (status != DFT_OK) throw Failure{dft_last_error()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{"cannot open " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{"cannot write " + path};
  out << text << '\n';
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

dft_kind parse_kind(const std::string& text) {
  if (text == "classical") return DFT_CLASSICAL;
  if (text == "free") return DFT_FREE;
  if (text == "boolean") return DFT_BOOLEAN;
  throw Failure{"unknown kind '" + text + "' (expected classical, free or boolean)"};
}

void load_table(const std::string& path, TableHandle& t) {
  if (path.empty()) throw Failure{"--in is required"};
  check(dft_table_from_json(read_file(path).c_str(), &t.p));
}

int finish(ReportHandle& r, const std::string& out) {
  write_output(out, dft_report_json(r.p));
  return static_cast<int>(dft_report_outcome(r.p));
}

struct Options {
  std::string out;
  std::string in;
  int k = 0;
  std::string family = "p";
  std::string kind;
  std::string direction;
  std::string tol = "0";
  std::string group;
  std::string schema;
  std::optional<int> n;
  std::optional<int> K;
  std::optional<int> D;
  std::optional<int> samples;
  std::optional<unsigned long long> seed;
  int threads = 1;
  std::string config;
  std::string lemma;
  std::string pi;
  std::string j;
  std::string target;
  std::string cover;
  std::optional<int> max_k;
  std::string verify_family;
};

int run_partitions(const Options& o) {
  ReportHandle r;
  check(dft_partitions(o.k, o.family.c_str(), &r.p));
  return finish(r, o.out);
}

int run_transform(const Options& o) {
  TableHandle in;
  load_table(o.in, in);
  dft_direction dir;
  if (o.direction == "m2c") {
    dir = DFT_MOMENTS_TO_CUMULANTS;
  } else if (o.direction == "c2m") {
    dir = DFT_CUMULANTS_TO_MOMENTS;
  } else {
    throw Failure{"--direction must be m2c or c2m"};
  }
  dft_kind kind;
  if (!o.kind.empty()) {
    kind = parse_kind(o.kind);
  } else {
    int is_moment = 0;
    check(dft_table_info(in.p, &is_moment, &kind, nullptr, nullptr));
    if (is_moment) throw Failure{"--kind is required for moment input"};
  }
  TableHandle result;
  check(dft_transform(in.p, kind, dir, &result.p));
  char* text = nullptr;
  check(dft_table_to_json(result.p, &text));
  std::unique_ptr<char, decltype(&dft_string_free)> guard(text, &dft_string_free);
  write_output(o.out, text);
  return 0;
}

int run_independence(const Options& o) {
  TableHandle in;
  load_table(o.in, in);
  int is_moment = 0;
  int n = 0;
  dft_kind table_kind = DFT_CLASSICAL;
  check(dft_table_info(in.p, &is_moment, &table_kind, &n, nullptr));
  ReportHandle r;
  if (!is_moment && n == 1) {
    check(dft_classify(in.p, o.tol.c_str(), &r.p));
    return finish(r, o.out);
  }
  if (is_moment) {
    if (o.kind.empty()) throw Failure{"--kind is required for moment input"};
    check(dft_independence_test(in.p, parse_kind(o.kind), o.tol.c_str(), &r.p));
    return finish(r, o.out);
  }
  TableHandle moments;
  check(dft_transform(in.p, table_kind, DFT_CUMULANTS_TO_MOMENTS, &moments.p));
  check(dft_independence_test(moments.p, table_kind, o.tol.c_str(), &r.p));
  return finish(r, o.out);
}

int run_symmetry(const Options& o) {
  TableHandle in;
  load_table(o.in, in);
  ReportHandle r;
  if (!o.schema.empty()) {
    int letters = 0;
    int max_order = 0;
    check(dft_table_info(in.p, nullptr, nullptr, &letters, &max_order));
    if (o.n && *o.n != letters) throw Failure{"--n must equal the number of letters in the table for --schema"};
    check(dft_quantum_invariance(in.p, o.schema.c_str(), o.K.value_or(max_order), o.D.value_or(4), &r.p));
    return finish(r, o.out);
  }
  std::string config;
  if (!o.config.empty()) {
    config = read_file(o.config);
    if (!o.group.empty() || o.n || o.K || o.samples || o.seed) {
      throw Failure{"--config cannot be combined with --group/--n/--K/--samples/--seed"};
    }
    if (o.threads != 1) {
      const auto brace = config.rfind('}');
      if (brace == std::string::npos) throw Failure{"malformed --config"};
      config.insert(brace, ", \"threads\": " + std::to_string(o.threads));
    }
  } else {
    if (o.group.empty()) throw Failure{"one of --group, --schema or --config is required"};
    if (!o.n || !o.K) throw Failure{"--n and --K are required"};
    std::string c = "{\"group\": \"" + json_escape(o.group) + "\", \"n\": " + std::to_string(*o.n) +
                    ", \"K\": " + std::to_string(*o.K) + ", \"tol\": \"" + json_escape(o.tol) + "\"" +
                    ", \"threads\": " + std::to_string(o.threads);
    if (o.samples) {
      if (*o.samples > 0 && !o.seed) throw Failure{"--seed is mandatory whenever --samples is given"};
      c += ", \"samples\": " + std::to_string(*o.samples);
    }
    if (o.seed) c += ", \"seed\": " + std::to_string(*o.seed);
    config = c + "}";
  }
  check(dft_symmetry_check(in.p, config.c_str(), &r.p));
  return finish(r, o.out);
}

int run_verify(const Options& o) {
  if (o.schema.empty() || !o.n || o.lemma.empty()) throw Failure{"--schema, --n and --lemma are required"};
  std::string req = "{\"lemma\": \"" + json_escape(o.lemma) + "\", \"schema\": \"" + json_escape(o.schema) +
                    "\", \"n\": " + std::to_string(*o.n);
  if (o.D) req += ", \"D\": " + std::to_string(*o.D);
  if (!o.pi.empty() || o.lemma == "vanishing") req += ", \"pi\": \"" + json_escape(o.pi) + "\"";
  if (!o.j.empty()) req += ", \"j\": \"" + json_escape(o.j) + "\"";
  if (!o.verify_family.empty()) req += ", \"family\": \"" + json_escape(o.verify_family) + "\"";
  if (!o.target.empty()) req += ", \"target\": \"" + json_escape(o.target) + "\"";
  if (!o.cover.empty()) req += ", \"cover\": \"" + json_escape(o.cover) + "\"";
  if (o.max_k) req += ", \"max_k\": " + std::to_string(*o.max_k);
  req += "}";
  ReportHandle r;
  check(dft_verify(req.c_str(), &r.p));
  return finish(r, o.out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"de Finetti toolkit: partitions, cumulants, independence, symmetries, algebra certificates"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(dft_version()));
  Options o;

  auto* partitions = app.add_subcommand("partitions", "Enumerate set partitions of a family");
  partitions->add_option("--k", o.k, "Ground set size")->required();
  partitions->add_option("--family", o.family, "Family: p, nc, i with optional h, b or 2 suffix");
  partitions->add_option("--out", o.out, "Output path (default stdout)");

  auto* transform = app.add_subcommand("transform", "Moment <-> cumulant transform");
  transform->add_option("--kind", o.kind, "classical, free or boolean");
  transform->add_option("--direction", o.direction, "m2c or c2m")->required();
  transform->add_option("--in", o.in, "Input table JSON")->required();
  transform->add_option("--out", o.out, "Output path (default stdout)");

  auto* independence = app.add_subcommand("independence", "Mixed-cumulant vanishing test or distribution class");
  independence->add_option("--in", o.in, "Input table JSON")->required();
  independence->add_option("--kind", o.kind, "Cumulant kind for moment input");
  independence->add_option("--tol", o.tol, "Rational tolerance p/q");
  independence->add_option("--out", o.out, "Output path (default stdout)");

  auto* symmetry = app.add_subcommand("symmetry", "Invariance under a group or a relation schema");
  symmetry->add_option("--in", o.in, "Moment table JSON")->required();
  symmetry->add_option("--group", o.group, "sym, hyperoct, bistoch or orth");
  symmetry->add_option("--schema", o.schema, "Relation schema for quantum invariance certificates");
  symmetry->add_option("--n", o.n, "Group size");
  symmetry->add_option("--K", o.K, "Largest word length checked");
  symmetry->add_option("--samples", o.samples, "Monte Carlo samples");
  symmetry->add_option("--seed", o.seed, "Monte Carlo seed");
  symmetry->add_option("--tol", o.tol, "Rational tolerance p/q");
  symmetry->add_option("--threads", o.threads, "Worker cap (results do not depend on it)");
  symmetry->add_option("--D,--degree", o.D, "Degree bound for --schema");
  symmetry->add_option("--config", o.config, "Symmetry config JSON");
  symmetry->add_option("--out", o.out, "Output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "Algebra verification with bounded-degree certificates");
  verify->add_option("--schema", o.schema, "Relation schema, e.g. p-magic")->required();
  verify->add_option("--n", o.n, "Matrix size")->required();
  verify->add_option("--lemma", o.lemma, "relations, coproduct, vanishing, vanishing_all, membership or quotient")
      ->required();
  verify->add_option("--D,--degree", o.D, "Degree bound");
  verify->add_option("--pi", o.pi, "Partition, e.g. \"1 3|2\"");
  verify->add_option("--j", o.j, "Index word, e.g. \"1 2\"");
  verify->add_option("--family", o.verify_family, "Partition family for vanishing");
  verify->add_option("--max-k", o.max_k, "Largest k for vanishing_all");
  verify->add_option("--target", o.target, "Target sum for membership");
  verify->add_option("--cover", o.cover, "Cover schema for quotient");
  verify->add_option("--out", o.out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (*partitions) return run_partitions(o);
    if (*transform) return run_transform(o);
    if (*independence) return run_independence(o);
    if (*symmetry) return run_symmetry(o);
    if (*verify) return run_verify(o);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    try {
      write_output(o.out, "{\n  \"error\": \"" + json_escape(f.message) + "\"\n}");
    } catch (const Failure&) {
    }
    return kExitInputError;
  }
  return kExitInputError;
}
