#include "causalchop/json_io.hpp"

#include <json.hpp>

namespace causalchop {

using ojson = nlohmann::ordered_json;

namespace {

ojson vec_to_json(const ExactVector& v) {
  ojson a = ojson::array();
  for (int k = 0; k < v.dim(); ++k) a.push_back(v[k].str());
  return a;
}

Rational rational_field(const ojson& j, const std::string& path) {
  if (!j.is_string() && !j.is_number_integer())
    throw ParseError("expected rational string at " + path, path);
  try {
    if (j.is_number_integer()) return Rational(j.get<long>());
    return Rational::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(std::string(e.what()) + " at " + path, path);
  }
}

ExactVector vec_field(const ojson& j, int dim, const std::string& path) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw ParseError("expected array of " + std::to_string(dim) + " rationals at " + path,
                     path);
  std::vector<Rational> c;
  for (size_t k = 0; k < j.size(); ++k)
    c.push_back(rational_field(j[k], path + "[" + std::to_string(k) + "]"));
  return ExactVector(std::move(c));
}

ojson hyperplane_to_json(const Hyperplane& h) {
  return ojson{{"base", vec_to_json(h.base)}, {"normal", vec_to_json(h.normal)}};
}

ojson report_to_json(const VerifyReport& r) {
  ojson j;
  j["pass"] = r.pass;
  j["structural_errors"] = r.structural_errors;
  ojson checks = ojson::array();
  for (const auto& c : r.checks) {
    ojson e;
    e["tuple"] = c.tuple;
    e["index"] = c.index;
    e["pass"] = c.pass;
    if (!c.pass) e["reason"] = c.reason;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace

ConfigFile parse_config(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), "");
  }
  ConfigFile cfg;
  if (!j.contains("dimension") || !j["dimension"].is_number_integer())
    throw ParseError("missing integer field 'dimension'", "dimension");
  cfg.dimension = j["dimension"].get<int>();
  if (cfg.dimension < 2) throw ParseError("dimension must be >= 2", "dimension");
  if (!j.contains("strings") || !j["strings"].is_array())
    throw ParseError("missing array field 'strings'", "strings");
  for (size_t k = 0; k < j["strings"].size(); ++k) {
    const std::string path = "strings[" + std::to_string(k) + "]";
    const ojson& s = j["strings"][k];
    if (!s.is_object() || !s.contains("x") || !s.contains("e"))
      throw ParseError("string entry needs fields 'x' and 'e' at " + path, path);
    ExactVector x = vec_field(s["x"], cfg.dimension, path + ".x");
    ExactVector e = vec_field(s["e"], cfg.dimension, path + ".e");
    if (!is_spacelike(e))
      throw ParseError("direction must be spacelike at " + path + ".e", path + ".e");
    cfg.strings.emplace_back(std::move(x), std::move(e));
  }
  if (j.contains("options")) {
    const ojson& o = j["options"];
    if (o.contains("refine_limit")) cfg.options.refine_limit = o["refine_limit"].get<int>();
    if (o.contains("jobs")) cfg.options.jobs = o["jobs"].get<int>();
    if (o.contains("seed")) cfg.options.seed = o["seed"].get<std::uint64_t>();
  }
  return cfg;
}

std::string config_to_json(const ConfigFile& cfg) {
  ojson j;
  j["dimension"] = cfg.dimension;
  ojson arr = ojson::array();
  for (const StringGeom& s : cfg.strings)
    arr.push_back(ojson{{"x", vec_to_json(s.base)}, {"e", vec_to_json(s.dir)}});
  j["strings"] = std::move(arr);
  j["options"] = ojson{{"refine_limit", cfg.options.refine_limit},
                       {"jobs", cfg.options.jobs},
                       {"seed", cfg.options.seed}};
  return j.dump(2);
}

std::string chopping_certificate_json(const ConfigFile& cfg, const Chopping& chopping,
                                      const LatestTable& table,
                                      const VerifyReport& report) {
  ojson j;
  j["kind"] = "chopping_certificate";
  j["dimension"] = cfg.dimension;
  ojson arr = ojson::array();
  for (const StringGeom& s : cfg.strings)
    arr.push_back(ojson{{"x", vec_to_json(s.base)}, {"e", vec_to_json(s.dir)}});
  j["strings"] = std::move(arr);
  ojson cuts = ojson::array();
  for (const auto& ci : chopping.cuts) {
    ojson row = ojson::array();
    for (const Rational& c : ci) row.push_back(c.str());
    cuts.push_back(std::move(row));
  }
  j["cuts"] = std::move(cuts);
  ojson latest = ojson::array();
  for (const auto& [tuple, index] : table.entries)
    latest.push_back(ojson{{"tuple", tuple}, {"index", index}});
  j["latest"] = std::move(latest);
  j["verification"] = report_to_json(report);
  return j.dump(2);
}

ChoppingCertificate parse_chopping_certificate(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), "");
  }
  ChoppingCertificate cert;
  cert.config = parse_config(j.dump());
  if (!j.contains("cuts") || !j["cuts"].is_array())
    throw ParseError("missing 'cuts'", "cuts");
  for (size_t i = 0; i < j["cuts"].size(); ++i) {
    std::vector<Rational> row;
    for (size_t k = 0; k < j["cuts"][i].size(); ++k)
      row.push_back(rational_field(j["cuts"][i][k], "cuts[" + std::to_string(i) + "][" +
                                                        std::to_string(k) + "]"));
    cert.chopping.cuts.push_back(std::move(row));
  }
  if (!j.contains("latest") || !j["latest"].is_array())
    throw ParseError("missing 'latest'", "latest");
  for (const auto& e : j["latest"]) {
    if (!e.contains("tuple") || !e.contains("index"))
      throw ParseError("malformed latest entry", "latest");
    cert.table.entries.emplace_back(e["tuple"].get<std::vector<int>>(),
                                    e["index"].get<int>());
  }
  return cert;
}

std::string two_chop_json(const ConfigFile& cfg, int i, int j, const TwoChopResult& res) {
  ojson out;
  out["kind"] = "two_chop_certificate";
  out["dimension"] = cfg.dimension;
  out["pair"] = std::vector<int>{i, j};
  ojson arr = ojson::array();
  for (const StringGeom& s : cfg.strings)
    arr.push_back(ojson{{"x", vec_to_json(s.base)}, {"e", vec_to_json(s.dir)}});
  out["strings"] = std::move(arr);
  out["branch"] = to_string(res.branch);
  if (res.no_chop) {
    ojson r;
    r["relation"] = to_string(res.no_chop->relation);
    if (res.no_chop->witness) r["sigma"] = hyperplane_to_json(*res.no_chop->witness);
    out["no_chop"] = std::move(r);
  }
  if (res.cut) {
    ojson r;
    r["cut"] = res.cut->cut.str();
    r["finite_rel"] = to_string(res.cut->finite_rel);
    r["tail_rel"] = to_string(res.cut->tail_rel);
    r["sigma1"] = hyperplane_to_json(res.cut->sigma1);
    r["sigma2"] = hyperplane_to_json(res.cut->sigma2);
    out["cut"] = std::move(r);
  }
  return out.dump(2);
}

std::string expression_to_json(const WickExpression& e) {
  ojson j;
  ojson terms = ojson::array();
  for (const auto& t : e.terms) {
    ojson term;
    term["coef"] = t.coef.str();
    ojson props = ojson::array();
    for (const auto& p : t.props) {
      ojson entry = ojson::array();
      switch (p.kind) {
        case PropagatorSymbol::Kind::TwoPoint:
          entry = {"W", p.i, p.j};
          break;
        case PropagatorSymbol::Kind::Feynman:
          entry = {"F", p.i, p.j};
          break;
        case PropagatorSymbol::Kind::SegmentTwoPoint:
          entry = {"S", p.i, p.alpha, p.j, p.beta};
          break;
      }
      props.push_back(std::move(entry));
    }
    term["props"] = std::move(props);
    ojson normal = ojson::array();
    for (const auto& f : t.normal) {
      if (f.piece < 0)
        normal.push_back(f.vertex);
      else
        normal.push_back(ojson::array({f.vertex, f.piece}));
    }
    term["normal"] = std::move(normal);
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  return j.dump(2);
}

WickExpression expression_from_json(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), "");
  }
  WickExpression e;
  if (!j.contains("terms") || !j["terms"].is_array())
    throw ParseError("missing 'terms'", "terms");
  for (const auto& t : j["terms"]) {
    WickExpression::Term term;
    term.coef = rational_field(t.at("coef"), "coef");
    for (const auto& p : t.at("props")) {
      const std::string tag = p.at(0).get<std::string>();
      if (tag == "W")
        term.props.push_back(PropagatorSymbol::two_point(p.at(1), p.at(2)));
      else if (tag == "F")
        term.props.push_back(PropagatorSymbol::feynman(p.at(1), p.at(2)));
      else if (tag == "S")
        term.props.push_back(
            PropagatorSymbol::segment(p.at(1), p.at(2), p.at(3), p.at(4)));
      else
        throw ParseError("unknown propagator tag '" + tag + "'", "props");
    }
    for (const auto& f : t.at("normal")) {
      if (f.is_number_integer())
        term.normal.push_back(FieldSymbol{f.get<int>(), -1});
      else
        term.normal.push_back(FieldSymbol{f.at(0).get<int>(), f.at(1).get<int>()});
    }
    e.terms.push_back(std::move(term));
  }
  e.canonicalize();
  return e;
}

std::string witness_to_json(const Witness& w) {
  ojson j;
  j["s"] = w.s ? w.s->str() : "0";
  j["t"] = w.t ? w.t->str() : "0";
  j["xi"] = vec_to_json(w.xi);
  return j.dump();
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace causalchop
