#include "rootnum/record.hpp"

#include <iomanip>
#include <sstream>

#include "rootnum/error.hpp"

namespace rootnum {

namespace {

using nlohmann::json;

json int_json(const Integer& n) {
  if (auto small = to_int64(n)) return *small;
  return to_string(n);
}

Integer int_from_json(const json& j) {
  if (j.is_number_integer()) return static_cast<long>(j.get<std::int64_t>());
  if (j.is_string()) {
    if (auto n = parse_integer(j.get<std::string>())) return *n;
  }
  throw Error(ErrorKind::InvalidArgument, "expected an integer, got " + j.dump());
}

json details_json(const LocalFactor& f) {
  json d = json::object();
  if (f.two) {
    d["v2"] = f.two->v2;
    d["odd_part_mod4"] = f.two->odd_part_mod4;
  }
  if (f.valuation) d["valuation"] = *f.valuation;
  if (f.wild) {
    d["shift"] = int_json(f.wild->shift);
    d["a_g"] = int_json(f.wild->constant);
    d["disc"] = int_json(f.wild->discriminant);
    d["v_p_a_g"] = f.wild->v_constant;
    d["v_p_disc"] = f.wild->v_discriminant;
    d["hilbert"] = f.wild->hilbert;
  }
  return d;
}

Place place_from_json(const json& j) {
  const std::string label = j.get<std::string>();
  if (label == "inf") return Place::infinity();
  auto n = parse_integer(label);
  if (!n) throw Error(ErrorKind::InvalidArgument, "bad place " + label);
  return Place::finite(*n);
}

std::string coeff_list(const IntPoly& g) {
  std::string out;
  for (const Integer& c : g.coeffs()) {
    if (!out.empty()) out += ",";
    out += to_string(c);
  }
  return out;
}

}  // namespace

OutputRecord compute_record(const Integer& p, const Integer& a,
                            const EngineOptions& options) {
  OutputRecord out;
  out.p = p;
  out.a = a;
  try {
    out.result = global_root_number(p, a, options);
  } catch (const Error& e) {
    out.status = std::string(error_name(e.kind()));
    out.message = e.what();
    out.supported = e.kind() != ErrorKind::UnsupportedTameCase;
    if (e.kind() == ErrorKind::NotPrime || e.kind() == ErrorKind::ZeroInput) {
      out.supported = false;
    }
  }
  return out;
}

json to_json(const OutputRecord& record) {
  json j;
  j["p"] = int_json(record.p);
  j["a"] = int_json(record.a);
  j["supported"] = record.supported;
  j["status"] = record.status;
  j["message"] = record.message;
  j["factors"] = json::array();
  if (!record.result) {
    j["global"] = nullptr;
    j["model"] = nullptr;
    return j;
  }
  const GlobalResult& r = *record.result;
  j["global"] = r.global_sign;
  for (const LocalFactor& f : r.factors) {
    j["factors"].push_back({{"place", f.place.label()},
                            {"sign", f.sign},
                            {"case", std::string(case_name(f.tag))},
                            {"details", details_json(f)}});
    if (f.wild) {
      json coeffs = json::array();
      for (const Integer& c : f.wild->model.coeffs()) coeffs.push_back(int_json(c));
      j["model"] = {{"shift", int_json(f.wild->shift)}, {"coeffs", coeffs}};
    }
  }
  return j;
}

OutputRecord record_from_json(const json& j) {
  OutputRecord out;
  out.p = int_from_json(j.at("p"));
  out.a = int_from_json(j.at("a"));
  out.supported = j.at("supported").get<bool>();
  out.status = j.at("status").get<std::string>();
  out.message = j.value("message", "");
  if (j.at("global").is_null()) return out;

  GlobalResult r{{out.p, out.a}, {}, j.at("global").get<int>()};
  std::optional<IntPoly> model;
  if (j.contains("model") && !j.at("model").is_null()) {
    std::vector<Integer> coeffs;
    for (const json& c : j.at("model").at("coeffs")) coeffs.push_back(int_from_json(c));
    model = IntPoly(std::move(coeffs));
  }
  for (const json& fj : j.at("factors")) {
    LocalFactor f;
    f.place = place_from_json(fj.at("place"));
    f.sign = fj.at("sign").get<int>();
    const auto tag = parse_case(fj.at("case").get<std::string>());
    if (!tag) throw Error(ErrorKind::InvalidArgument, "unknown case " + fj.dump());
    f.tag = *tag;
    const json& d = fj.at("details");
    if (d.contains("v2")) {
      f.two = TwoDetails{d.at("v2").get<std::int64_t>(),
                         d.at("odd_part_mod4").get<int>()};
    }
    if (d.contains("valuation")) f.valuation = d.at("valuation").get<std::int64_t>();
    if (d.contains("a_g")) {
      if (!model) throw Error(ErrorKind::InvalidArgument, "wild factor without model");
      f.wild = WildDetails{int_from_json(d.at("shift")),
                           *model,
                           int_from_json(d.at("a_g")),
                           int_from_json(d.at("disc")),
                           d.at("v_p_a_g").get<std::int64_t>(),
                           d.at("v_p_disc").get<std::int64_t>(),
                           d.at("hilbert").get<int>()};
    }
    r.factors.push_back(std::move(f));
  }
  out.result = std::move(r);
  return out;
}

std::string render_table(const OutputRecord& record) {
  std::ostringstream os;
  os << "curve: y^2 = x^" << record.p << (record.a < 0 ? " - " : " + ")
     << abs(record.a) << "\n";
  if (!record.result) {
    os << "status: " << record.status << "\n";
    if (!record.message.empty()) os << "message: " << record.message << "\n";
    return os.str();
  }
  const GlobalResult& r = *record.result;
  os << "global root number: " << (r.global_sign > 0 ? "+1" : "-1") << "\n";
  os << std::left << std::setw(8) << "place" << std::setw(6) << "sign"
     << std::setw(14) << "case" << "details\n";
  for (const LocalFactor& f : r.factors) {
    std::string details;
    if (f.two) {
      details = "v2=" + std::to_string(f.two->v2) +
                " a'mod4=" + std::to_string(f.two->odd_part_mod4);
    } else if (f.valuation) {
      details = "v=" + std::to_string(*f.valuation);
    } else if (f.wild) {
      const WildDetails& w = *f.wild;
      details = "r=" + to_string(w.shift) + " a_g=" + to_string(w.constant) +
                " v(a_g)=" + std::to_string(w.v_constant) +
                " disc=" + to_string(w.discriminant) +
                " v(disc)=" + std::to_string(w.v_discriminant) +
                " hilbert=" + std::to_string(w.hilbert);
    }
    os << std::setw(8) << f.place.label() << std::setw(6)
       << (f.sign > 0 ? "+1" : "-1") << std::setw(14) << case_name(f.tag)
       << details << "\n";
    if (f.wild) {
      os << "model: y^2 = " << f.wild->model.to_string() << "  [coeffs "
         << coeff_list(f.wild->model) << "]\n";
    }
  }
  return os.str();
}

}  // namespace rootnum
