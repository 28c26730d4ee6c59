#include "report.hpp"

namespace artin::cli {

  void Report::header(std::string const& key, nlohmann::ordered_json value) {
    _header[key] = std::move(value);
  }

  void Report::add(std::string const& key, nlohmann::ordered_json value) {
    _body[key] = std::move(value);
  }

  std::string render_value(nlohmann::ordered_json const& v) {
    if (v.is_string()) {
      return v.get<std::string>();
    }
    if (v.is_array()) {
      std::string out;
      for (auto const& x : v) {
        if (!out.empty()) {
          out += ' ';
        }
        out += render_value(x);
      }
      return out;
    }
    return v.dump();
  }

  std::string Report::text() const {
    std::string out;
    for (auto const* part : {&_header, &_body}) {
      for (auto const& [key, value] : part->items()) {
        out += key + ": " + render_value(value) + '\n';
      }
    }
    return out;
  }

  std::string Report::json() const {
    nlohmann::ordered_json all = _header;
    for (auto const& [key, value] : _body.items()) {
      all[key] = value;
    }
    return all.dump(2) + '\n';
  }

}  // namespace artin::cli
