#include "jrplab/io.hpp"

#include <fstream>

namespace jrplab {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::parse, where + ": " + what);
}

void expect_keys(const json& obj, const std::string& where,
                 std::initializer_list<const char*> required,
                 std::initializer_list<const char*> optional = {}) {
  if (!obj.is_object()) bad(where, "expected an object");
  for (const char* k : required)
    if (!obj.contains(k)) bad(where, std::string("missing field \"") + k + "\"");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : required) known = known || it.key() == k;
    for (const char* k : optional) known = known || it.key() == k;
    if (!known) bad(where, "unknown field \"" + it.key() + "\"");
  }
}

Rat rat_field(const json& v, const std::string& where) {
  if (!v.is_string()) bad(where, "fractions must be \"num/den\" strings");
  try {
    return Rat::parse(v.get<std::string>());
  } catch (const Error& e) {
    bad(where, e.what());
  }
}

Rat nonneg_rat(const json& v, const std::string& where) {
  Rat r = rat_field(v, where);
  if (r.sign() < 0) bad(where, "value must be non-negative");
  return r;
}

int int_field(const json& v, const std::string& where) {
  if (!v.is_number_integer()) bad(where, "expected an integer");
  return v.get<int>();
}

std::vector<Rat> rat_array(const json& v, const std::string& where, bool nonneg) {
  if (!v.is_array()) bad(where, "expected an array");
  std::vector<Rat> out;
  out.reserve(v.size());
  for (size_t i = 0; i < v.size(); ++i)
    out.push_back(nonneg ? nonneg_rat(v[i], where + "[" + std::to_string(i) + "]")
                         : rat_field(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

json rats_to_json(const std::vector<Rat>& rs) {
  json arr = json::array();
  for (const Rat& r : rs) arr.push_back(r.str());
  return arr;
}

json set_to_json(TypeSet s) {
  json arr = json::array();
  for (int i : set_to_indices(s)) arr.push_back(i);
  return arr;
}

TypeSet set_from_json(const json& v, int n, const std::string& where) {
  if (!v.is_array()) bad(where, "expected a sorted index array");
  std::vector<int> idx;
  int prev = -1;
  for (const auto& e : v) {
    const int i = int_field(e, where);
    if (i <= prev) bad(where, "indices must be sorted and distinct");
    prev = i;
    idx.push_back(i);
  }
  try {
    return indices_to_set(idx, n);
  } catch (const Error& e) {
    bad(where, e.what());
  }
}

DelayFn delay_from_json(const json& v, const std::string& where) {
  expect_keys(v, where, {"breakpoints", "final_slope"});
  DelayFn d;
  const json& bps = v["breakpoints"];
  if (!bps.is_array() || bps.empty()) bad(where, "breakpoints must be a non-empty array");
  for (size_t i = 0; i < bps.size(); ++i) {
    const std::string bw = where + ".breakpoints[" + std::to_string(i) + "]";
    if (!bps[i].is_array() || bps[i].size() != 2) bad(bw, "expected a [time, value] pair");
    d.breakpoints.emplace_back(rat_field(bps[i][0], bw), nonneg_rat(bps[i][1], bw));
  }
  d.final_slope = nonneg_rat(v["final_slope"], where + ".final_slope");
  return d;
}

json delay_to_json(const DelayFn& d) {
  json bps = json::array();
  for (const auto& [t, val] : d.breakpoints) bps.push_back(json::array({t.str(), val.str()}));
  return json{{"breakpoints", bps}, {"final_slope", d.final_slope.str()}};
}

RequestStream stream_from_json(const json& v, int n) {
  RequestStream stream;
  stream.n = n;
  if (!v.is_array()) bad("requests", "expected an array");
  int id = 0;
  for (const auto& rj : v) {
    const std::string where = "requests[" + std::to_string(id) + "]";
    expect_keys(rj, where, {"type", "arrival", "delay"});
    Request q;
    q.id = id++;
    q.type = int_field(rj["type"], where + ".type");
    q.arrival = rat_field(rj["arrival"], where + ".arrival");
    q.delay = delay_from_json(rj["delay"], where + ".delay");
    stream.requests.push_back(std::move(q));
  }
  try {
    stream.validate();
  } catch (const Error& e) {
    bad("requests", e.what());
  }
  return stream;
}

json stream_to_json(const RequestStream& stream) {
  json arr = json::array();
  for (const Request& q : stream.requests)
    arr.push_back(json{{"type", q.type},
                       {"arrival", q.arrival.str()},
                       {"delay", delay_to_json(q.delay)}});
  return arr;
}

}  // namespace

json serialize_partition(const Partition& p) {
  p.validate();
  json parts = json::array();
  for (TypeSet s : p.parts) parts.push_back(set_to_json(s));
  json doc{{"schema", kPartitionSchema},
           {"n", p.n},
           {"parts", parts},
           {"costs", rats_to_json(p.costs)}};
  if (!p.tags.empty()) {
    json tags = json::array();
    for (PartTag t : p.tags) tags.push_back(part_tag_name(t));
    doc["tags"] = tags;
  }
  return doc;
}

Partition parse_partition(const json& doc) {
  expect_keys(doc, "partition", {"schema", "n", "parts", "costs"}, {"tags"});
  if (doc["schema"] != kPartitionSchema) bad("partition.schema", "unsupported schema");
  Partition p;
  p.n = int_field(doc["n"], "partition.n");
  if (p.n < 1 || p.n > kMaxMaskTypes) bad("partition.n", "universe size out of range");
  if (!doc["parts"].is_array()) bad("partition.parts", "expected an array");
  int i = 0;
  for (const auto& pj : doc["parts"])
    p.parts.push_back(set_from_json(pj, p.n, "partition.parts[" + std::to_string(i++) + "]"));
  p.costs = rat_array(doc["costs"], "partition.costs", /*nonneg=*/true);
  if (doc.contains("tags")) {
    for (const auto& tj : doc["tags"]) {
      if (!tj.is_string()) bad("partition.tags", "expected tag names");
      try {
        p.tags.push_back(part_tag_from_name(tj.get<std::string>()));
      } catch (const Error& e) {
        bad("partition.tags", e.what());
      }
    }
  }
  try {
    p.validate();
  } catch (const Error& e) {
    bad("partition", e.what());
  }
  return p;
}

json serialize_instance(const InstanceFile& inst) {
  json doc{{"schema", kInstanceSchema}};
  const ServiceFunctionSpec& f = inst.spec;
  doc["kind"] = fn_kind_name(f.kind());
  switch (f.kind()) {
    case FnKind::explicit_table:
      doc["explicit"] = json{{"n", f.n()}, {"table", rats_to_json(f.as_explicit()->table)}};
      break;
    case FnKind::disjoint: {
      json pj = serialize_partition(f.as_disjoint()->partition);
      pj.erase("schema");
      doc["disjoint"] = pj;
      break;
    }
    case FnKind::mla_tree: {
      const MlaInstance& t = f.as_mla()->tree;
      doc["mla"] = json{{"parent", t.parent}, {"costs", rats_to_json(t.cost)}};
      break;
    }
    case FnKind::symmetric:
      doc["symmetric"] = json{{"n", f.n()}, {"values", rats_to_json(f.as_symmetric()->values)}};
      break;
    case FnKind::weighted_symmetric: {
      const WeightedInstance& w = f.as_weighted()->instance;
      json pieces = json::array();
      for (const AffinePiece& p : w.envelope.pieces)
        pieces.push_back(json::array({p.sigma.str(), p.delta.str()}));
      doc["weighted_symmetric"] =
          json{{"weights", rats_to_json(w.weights)},
               {"envelope", json{{"pieces", pieces}, {"W", w.envelope.total_weight}}}};
      break;
    }
  }
  if (inst.requests) doc["requests"] = stream_to_json(*inst.requests);
  return doc;
}

InstanceFile parse_instance(const json& doc) {
  expect_keys(doc, "instance", {"schema", "kind"},
              {"explicit", "disjoint", "symmetric", "weighted_symmetric", "mla", "requests"});
  if (doc["schema"] != kInstanceSchema) bad("schema", "unsupported schema");
  if (!doc["kind"].is_string()) bad("kind", "expected a string");
  const std::string kind = doc["kind"].get<std::string>();
  if (!doc.contains(kind)) bad(kind, "missing payload for declared kind");
  for (const char* other : {"explicit", "disjoint", "symmetric", "weighted_symmetric", "mla"})
    if (other != kind && doc.contains(other)) bad(other, "payload does not match declared kind");

  auto build = [&]() -> ServiceFunctionSpec {
    const json& body = doc[kind];
    try {
      if (kind == "explicit") {
        expect_keys(body, "explicit", {"n", "table"});
        return ServiceFunctionSpec::make_explicit(
            int_field(body["n"], "explicit.n"),
            rat_array(body["table"], "explicit.table", /*nonneg=*/true));
      }
      if (kind == "disjoint") {
        json pj = body;
        pj["schema"] = kPartitionSchema;
        return ServiceFunctionSpec::make_disjoint(parse_partition(pj));
      }
      if (kind == "mla") {
        expect_keys(body, "mla", {"parent", "costs"});
        MlaInstance t;
        if (!body["parent"].is_array()) bad("mla.parent", "expected an array");
        for (const auto& pj : body["parent"]) t.parent.push_back(int_field(pj, "mla.parent"));
        t.cost = rat_array(body["costs"], "mla.costs", /*nonneg=*/true);
        return ServiceFunctionSpec::make_mla(std::move(t));
      }
      if (kind == "symmetric") {
        expect_keys(body, "symmetric", {"n", "values"});
        return ServiceFunctionSpec::make_symmetric(
            int_field(body["n"], "symmetric.n"),
            rat_array(body["values"], "symmetric.values", /*nonneg=*/true));
      }
      if (kind == "weighted_symmetric") {
        expect_keys(body, "weighted_symmetric", {"weights", "envelope"});
        WeightedInstance w;
        w.weights = rat_array(body["weights"], "weighted_symmetric.weights", /*nonneg=*/true);
        const json& ej = body["envelope"];
        expect_keys(ej, "weighted_symmetric.envelope", {"pieces", "W"});
        if (!ej["pieces"].is_array()) bad("envelope.pieces", "expected an array");
        for (const auto& pj : ej["pieces"]) {
          if (!pj.is_array() || pj.size() != 2)
            bad("envelope.pieces", "each piece is a [sigma, delta] pair");
          w.envelope.pieces.push_back(
              {nonneg_rat(pj[0], "envelope.sigma"), nonneg_rat(pj[1], "envelope.delta")});
        }
        w.envelope.total_weight = int_field(ej["W"], "envelope.W");
        return ServiceFunctionSpec::make_weighted(std::move(w));
      }
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::parse) throw;
      bad(kind, e.what());
    }
    bad("kind", "unknown kind \"" + kind + "\"");
  };

  InstanceFile out{build(), std::nullopt};
  if (doc.contains("requests")) out.requests = stream_from_json(doc["requests"], out.spec.n());
  return out;
}

json stretch_report_json(const StretchReport& r) {
  json breakdown = json::array();
  for (int part : r.hit_parts) breakdown.push_back(part);
  return json{{"finite", r.finite},
              {"ratio_num", r.finite ? r.ratio.num().get_str() : "inf"},
              {"ratio_den", r.finite ? r.ratio.den().get_str() : "0"},
              {"witness", set_to_json(r.witness)},
              {"hit_parts", breakdown}};
}

json schedule_json(const ServiceSchedule& s) {
  json services = json::array();
  for (const Service& sv : s.services) {
    json ids = json::array();
    for (int id : sv.request_ids) ids.push_back(id);
    services.push_back(json{{"time", sv.time.str()},
                            {"requests", ids},
                            {"types", set_to_json(sv.types)},
                            {"part", sv.part},
                            {"cost_g", sv.cost_g.str()},
                            {"cost_f", sv.cost_f.str()}});
  }
  json completions = json::array();
  for (const auto& c : s.completion) completions.push_back(c ? json(c->str()) : json(nullptr));
  json unserved = json::array();
  for (int id : s.unserved) unserved.push_back(id);
  return json{{"services", services},
              {"completions", completions},
              {"unserved", unserved},
              {"delay_cost", s.delay_cost.str()},
              {"service_cost_g", s.service_cost_g().str()},
              {"service_cost_f", s.service_cost_f().str()},
              {"total_g", s.total_g().str()},
              {"total_f", s.total_f().str()}};
}

void write_json_file(const json& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::validation, "cannot open for writing: " + path);
  out << doc.dump(2) << "\n";
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse, "cannot open: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, std::string("malformed JSON in ") + path + ": " + e.what());
  }
  return doc;
}

void write_instance(const InstanceFile& inst, const std::string& path) {
  write_json_file(serialize_instance(inst), path);
}

InstanceFile read_instance(const std::string& path) {
  return parse_instance(read_json_file(path));
}

}  // namespace jrplab
