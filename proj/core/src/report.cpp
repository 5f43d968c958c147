#include "relicut/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "json.hpp"

namespace relicut {

namespace {

using Json = nlohmann::ordered_json;

Json to_json(const Report& r);

Json value_json(const Report::Value& v) {
  return std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::nullptr_t>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(x)) return nullptr;
          return x;
        } else if constexpr (std::is_same_v<T, Report::List>) {
          Json arr = Json::array();
          for (const Report& r : x) arr.push_back(to_json(r));
          return arr;
        } else {
          return x;
        }
      },
      v);
}

Json to_json(const Report& r) {
  Json obj = Json::object();
  for (const auto& [key, value] : r.fields()) obj[key] = value_json(value);
  return obj;
}

void write_text(const Report& r, std::ostringstream& out, const std::string& indent) {
  std::size_t width = 0;
  for (const auto& [key, value] : r.fields()) width = std::max(width, key.size());
  for (const auto& [key, value] : r.fields()) {
    out << indent << key << std::string(width - key.size() + 2, ' ');
    if (const auto* list = std::get_if<Report::List>(&value)) {
      out << list->size() << " entries\n";
      for (std::size_t i = 0; i < list->size(); ++i) {
        out << indent << "  [" << i << "]\n";
        write_text((*list)[i], out, indent + "    ");
      }
      continue;
    }
    if (const auto* s = std::get_if<std::string>(&value))
      out << *s;
    else
      out << value_json(value).dump();
    out << '\n';
  }
}

}  // namespace

Report& Report::set(std::string key, Value value) {
  for (auto& field : fields_)
    if (field.first == key) {
      field.second = std::move(value);
      return *this;
    }
  fields_.emplace_back(std::move(key), std::move(value));
  return *this;
}

const Report::Value* Report::find(const std::string& key) const {
  for (const auto& field : fields_)
    if (field.first == key) return &field.second;
  return nullptr;
}

std::string Report::json(int indent) const { return to_json(*this).dump(indent); }

std::string Report::text() const {
  std::ostringstream out;
  write_text(*this, out, "");
  return out.str();
}

std::string format_number(double x) { return value_json(x).dump(); }

Report estimate_report(const Estimate& e, bool timing) {
  const Diagnostics& d = e.diagnostics;
  Report r;
  r.add("estimate", e.value);
  r.add("method", std::string(method_name(e.method)));
  r.add("epsilon", e.epsilon);
  r.add("eta", e.eta);
  r.add("seed", e.seed);
  r.add("n", static_cast<std::uint64_t>(d.n));
  r.add("m", static_cast<std::uint64_t>(d.m));
  r.add("min_cut", d.min_cut);
  r.add("weighted_min_cut", d.weighted_min_cut);
  r.add("p_c", std::isnan(d.log_p_c) ? d.log_p_c : std::exp(d.log_p_c));
  r.add("log_p_c", d.log_p_c);
  r.add("delta", d.delta);
  r.add("alpha", d.alpha);
  r.add("cuts_enumerated", d.cuts);
  r.add("trials", d.trials);
  if (e.certified_error_bound) r.add("certified_error_bound", *e.certified_error_bound);
  if (timing) r.add("wall_ms", d.wall_ms);
  return r;
}

}  // namespace relicut
