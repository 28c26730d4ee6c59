#pragma once

// Key:value reports with a fixed header; the same data renders as one JSON object.

#include <cstdint>
#include <string>

#include <json.hpp>

namespace artin::cli {

  class Report {
   public:
    //! Header entry; header entries always precede body entries.
    void header(std::string const& key, nlohmann::ordered_json value);
    //! Body entry; re-adding a key overwrites it in place.
    void add(std::string const& key, nlohmann::ordered_json value);

    bool empty() const noexcept { return _body.empty(); }
    nlohmann::ordered_json const& body() const noexcept { return _body; }

    //! One "key: value" line per entry, header first.
    std::string text() const;
    //! Header and body merged into a single JSON object, same keys as text().
    std::string json() const;

   private:
    nlohmann::ordered_json _header = nlohmann::ordered_json::object();
    nlohmann::ordered_json _body = nlohmann::ordered_json::object();
  };

  //! Scalar rendering used by text(): strings verbatim, everything else as JSON.
  std::string render_value(nlohmann::ordered_json const& v);

}  // namespace artin::cli
