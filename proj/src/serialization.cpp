#include "serialization.hpp"

#include "errors.hpp"

namespace definetti {

MomentFunctional AnyTable::moments() const {
  if (!is_moment()) throw InputError("expected a moment table, got " + kind_name(*cumulant_kind) + " cumulants");
  MomentFunctional m(table.alphabet(), table.max_order());
  m.table = table;
  m.table[0] = 1;
  return m;
}

CumulantTable AnyTable::cumulants() const {
  if (is_moment()) throw InputError("expected a cumulant table, got moments");
  CumulantTable c(*cumulant_kind, table.alphabet(), table.max_order());
  c.table = table;
  return c;
}

AnyTable AnyTable::from(const MomentFunctional& m) { return {std::nullopt, m.table}; }
AnyTable AnyTable::from(const CumulantTable& c) { return {c.kind, c.table}; }

namespace {

Json word_json(std::span<const int> w) { return Json(std::vector<int>(w.begin(), w.end())); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw InputError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

std::string big_text(const Json& v, const char* what) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  throw InputError(std::string(what) + " must be an integer or an integer string");
}

Json tensor_word_json(const algebra::Alphabet& a, const algebra::TensorWord& w) {
  Json out = Json::array();
  for (const auto& f : w) out.push_back(algebra::word_text(a, f));
  return out;
}

}  // namespace

Json rational_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return parse_rational(j.dump());
  throw InputError("rational values must be strings \"p/q\" or integers");
}

AnyTable table_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("table JSON must be an object");
  const std::string kind = field(j, "kind").is_string() ? j.at("kind").get<std::string>() : "";
  AnyTable out;
  if (kind != "moment" && kind != "moments") out.cumulant_kind = parse_kind(kind);
  const int n = int_field(j, "n");
  const int K = int_field(j, "K");
  if (n < 1) throw InputError("n must be at least 1");
  if (K < 1) throw InputError("K must be at least 1");
  out.table = WordTable(n, K);
  if (out.is_moment()) out.table[0] = 1;
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) throw InputError("'entries' must be an array");
  std::vector<bool> seen(out.table.size(), false);
  for (const auto& e : entries) {
    const Json& word = field(e, "word");
    if (!word.is_array()) throw InputError("'word' must be an array of letters");
    IndexWord w;
    for (const auto& x : word) {
      if (!x.is_number_integer()) throw InputError("word letters must be integers");
      w.push_back(x.get<int>());
    }
    if (w.empty()) throw InputError("the empty word may not be listed in 'entries'");
    if (!out.table.contains(w)) throw InputError("word " + word_to_text(w) + " is outside n/K");
    Rational value;
    if (e.contains("value")) {
      value = rational_from_json(e.at("value"));
    } else {
      std::string num = big_text(field(e, "num"), "'num'");
      std::string den = e.contains("den") ? big_text(e.at("den"), "'den'") : "1";
      value = parse_rational(num + "/" + den);
    }
    const std::size_t idx = out.table.index_of(w);
    if (seen[idx]) throw InputError("word " + word_to_text(w) + " listed twice");
    seen[idx] = true;
    out.table[idx] = value;
  }
  return out;
}

Json table_to_json(const AnyTable& t) {
  Json out;
  out["kind"] = t.is_moment() ? "moment" : kind_name(*t.cumulant_kind);
  out["n"] = t.table.alphabet();
  out["K"] = t.table.max_order();
  Json entries = Json::array();
  for (std::size_t i = 1; i < t.table.size(); ++i) {
    const Rational& v = t.table[i];
    if (sgn(v) == 0) continue;
    Json e;
    e["word"] = word_json(t.table.word_at(i));
    e["num"] = v.get_num().get_str();
    e["den"] = v.get_den().get_str();
    entries.push_back(std::move(e));
  }
  out["entries"] = std::move(entries);
  return out;
}

Json partitions_json(int k, FamilyTag family, const std::vector<SetPartition>& parts) {
  Json out;
  out["k"] = k;
  out["family"] = family.name();
  out["count"] = parts.size();
  Json list = Json::array();
  for (const auto& p : parts) list.push_back(p.to_text());
  out["partitions"] = std::move(list);
  return out;
}

Json independence_json(const IndependenceReport& r) {
  Json out;
  out["passed"] = r.passed();
  out["kind"] = kind_name(r.kind);
  out["max_order"] = r.max_order;
  Json offenders = Json::array();
  for (const auto& [w, v] : r.offenders) offenders.push_back({{"word", word_json(w)}, {"value", rational_json(v)}});
  out["offenders"] = std::move(offenders);
  return out;
}

Json classification_json(const DistributionClass& c) {
  Json out;
  out["passed"] = true;
  out["kind"] = kind_name(c.kind);
  out["class"] = class_name(c.tag);
  FamilyTag family{lattice_of(c.kind), c.block_constraint()};
  out["partition_family"] = family.name();
  return out;
}

Json invariance_json(const InvarianceReport& r) {
  Json out;
  out["passed"] = r.passed;
  out["group"] = r.group.family_name();
  out["n"] = r.group.n;
  out["extension"] = r.extension;
  out["K"] = r.max_order;
  out["mode"] = r.mode == InvarianceMode::Exact ? "exact" : "monte_carlo";
  if (r.mode == InvarianceMode::MonteCarlo) {
    out["seed"] = r.seed;
    out["samples"] = r.samples;
    out["tol"] = rational_json(r.tol);
  }
  Json failures = Json::array();
  for (const auto& w : r.failures()) failures.push_back(word_json(w));
  out["failures"] = std::move(failures);
  Json residuals = Json::array();
  for (const auto& res : r.residuals) {
    Json e;
    e["word"] = word_json(res.word);
    if (r.mode == InvarianceMode::Exact) {
      e["max_abs_residual"] = rational_json(res.exact);
    } else {
      e["mean"] = res.mean;
      e["stderr"] = res.stderr_;
    }
    e["passed"] = res.passed;
    residuals.push_back(std::move(e));
  }
  out["residuals"] = std::move(residuals);
  return out;
}

Json certificate_json(const algebra::Alphabet& a, const algebra::MembershipCertificate& c) {
  Json out;
  out["degree_bound"] = c.degree_bound;
  out["tensor_degree"] = c.target.tensor_degree();
  Json terms = Json::array();
  for (const auto& t : c.terms) {
    Json e;
    e["left"] = tensor_word_json(a, t.left);
    e["relation"] = t.relation;
    e["right"] = tensor_word_json(a, t.right);
    e["coefficient"] = rational_json(t.coefficient);
    terms.push_back(std::move(e));
  }
  out["terms"] = std::move(terms);
  return out;
}

Json membership_json(const algebra::MembershipResult& m) {
  Json out;
  out["verdict"] = algebra::verdict_name(m.verdict);
  out["target"] = m.target.to_text();
  if (m.certificate) out["certificate"] = certificate_json(m.target.alphabet(), *m.certificate);
  if (m.refutation) {
    out["refutation"] = {{"characters", m.refutation->labels}, {"value", rational_json(m.refutation->value)}};
  }
  return out;
}

Json verification_json(const algebra::VerificationReport& r) {
  Json out;
  out["check"] = r.check;
  out["schema"] = r.schema.name_text();
  out["n"] = r.schema.n;
  out["D"] = r.degree_bound;
  out["outcome"] = algebra::verdict_name(r.overall());
  Json gens = Json::array();
  for (const auto& g : r.generators) gens.push_back(g.to_text());
  out["generators"] = std::move(gens);
  out["relation_indexing"] =
      "tensor degree 1: generators[i]; tensor degree t: factor f * len(generators) + i embeds generators[i] in factor f";
  Json items = Json::array();
  for (const auto& item : r.items) {
    Json e = membership_json(item.result);
    e["label"] = item.label;
    items.push_back(std::move(e));
  }
  out["items"] = std::move(items);
  return out;
}

Json quantum_invariance_json(const QuantumInvarianceReport& r) {
  Json out;
  out["check"] = "quantum_invariance";
  out["schema"] = r.schema.name_text();
  out["n"] = r.schema.n;
  out["K"] = r.max_order;
  out["D"] = r.degree_bound;
  out["outcome"] = algebra::verdict_name(r.overall());
  Json gens = Json::array();
  for (const auto& g : r.generators) gens.push_back(g.to_text());
  out["generators"] = std::move(gens);
  Json words = Json::array();
  for (const auto& w : r.words) {
    Json e = membership_json(w.result);
    e["word"] = word_json(w.word);
    words.push_back(std::move(e));
  }
  out["words"] = std::move(words);
  return out;
}

SymmetryConfig symmetry_config_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("symmetry config must be a JSON object");
  SymmetryConfig c;
  const Json& g = field(j, "group");
  if (!g.is_string()) throw InputError("'group' must be a string");
  c.group.family = GroupTag::parse_family(g.get<std::string>());
  c.group.n = int_field(j, "n");
  c.K = int_field(j, "K");
  if (j.contains("samples")) c.mc.samples = int_field(j, "samples");
  if (j.contains("seed")) {
    const Json& s = j.at("seed");
    if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<long long>() >= 0)) {
      throw InputError("'seed' must be a nonnegative integer");
    }
    c.mc.seed = s.get<std::uint64_t>();
    c.seed_given = true;
  }
  if (j.contains("tol")) c.mc.tol = rational_from_json(j.at("tol"));
  if (j.contains("threads")) c.mc.threads = int_field(j, "threads");
  if (!c.group.enumerable() && !c.seed_given) throw InputError("a seed is mandatory for Monte Carlo groups");
  return c;
}

}  // namespace definetti
