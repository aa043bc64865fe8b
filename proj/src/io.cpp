// Copyright 2026 The nilsem Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nilsem/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nilsem/errors.hpp"

namespace nilsem {

  namespace {

    std::size_t line_of_offset(std::string_view text, std::size_t offset) {
      offset = std::min(offset, text.size());
      return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + offset, '\n'));
    }

    Transformation make_map(std::vector<long long> const& row, std::size_t n, std::size_t line) {
      if (row.size() != n) {
        throw ParseError(line, "expected " + std::to_string(n) + " images, found "
                                   + std::to_string(row.size()));
      }
      std::vector<Point> im;
      for (auto v : row) {
        if (v < 1 || static_cast<std::size_t>(v) > n) {
          throw ParseError(line, "image " + std::to_string(v) + " out of range 1.."
                                     + std::to_string(n));
        }
        im.push_back(static_cast<Point>(v - 1));
      }
      return Transformation(std::move(im));
    }

    MapSet parse_text(std::string_view contents) {
      MapSet             out;
      std::istringstream in{std::string(contents)};
      std::string        raw;
      std::size_t        line = 0;
      bool               have_n = false;
      while (std::getline(in, raw)) {
        ++line;
        if (auto hash = raw.find('#'); hash != std::string::npos) {
          raw.resize(hash);
        }
        std::istringstream fields(raw);
        std::string        first;
        if (!(fields >> first)) {
          continue;
        }
        if (!have_n) {
          long long n = 0;
          if (first != "n" || !(fields >> n) || n < 1) {
            throw ParseError(line, "expected a header line \"n <degree>\"");
          }
          std::string extra;
          if (fields >> extra) {
            throw ParseError(line, "unexpected text after the degree");
          }
          out.n  = static_cast<std::size_t>(n);
          have_n = true;
          continue;
        }
        std::vector<long long> row;
        std::istringstream     all(raw);
        std::string            token;
        while (all >> token) {
          std::size_t used = 0;
          long long   v    = 0;
          try {
            v = std::stoll(token, &used);
          } catch (std::exception const&) {
            used = 0;
          }
          if (used != token.size()) {
            throw ParseError(line, "not an integer: \"" + token + "\"");
          }
          row.push_back(v);
        }
        out.maps.push_back(make_map(row, out.n, line));
      }
      if (!have_n) {
        throw ParseError(line, "missing header line \"n <degree>\"");
      }
      return out;
    }

    MapSet parse_json(std::string_view contents) {
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(contents);
      } catch (nlohmann::json::parse_error const& e) {
        throw ParseError(line_of_offset(contents, e.byte), "invalid JSON");
      }
      MapSet out;
      if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer()
          || doc["n"].get<long long>() < 1) {
        throw ParseError(1, "JSON needs a positive integer field \"n\"");
      }
      out.n = doc["n"].get<std::size_t>();
      if (!doc.contains("maps") || !doc["maps"].is_array()) {
        throw ParseError(1, "JSON needs an array field \"maps\"");
      }
      // Locate each map's row in the source so errors can name a line.
      std::size_t search_from = contents.find('[', contents.find("\"maps\""));
      for (auto const& row : doc["maps"]) {
        search_from = contents.find('[', search_from + 1);
        auto const line = line_of_offset(contents, search_from);
        if (!row.is_array()) {
          throw ParseError(line, "each map must be an array of integers");
        }
        std::vector<long long> values;
        for (auto const& v : row) {
          if (!v.is_number_integer()) {
            throw ParseError(line, "each map must be an array of integers");
          }
          values.push_back(v.get<long long>());
        }
        out.maps.push_back(make_map(values, out.n, line));
      }
      return out;
    }

  }  // namespace

  MapSet parse_maps(std::string_view contents) {
    auto first = contents.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && contents[first] == '{') {
      return parse_json(contents);
    }
    return parse_text(contents);
  }

  MapSet read_maps(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw ParseError(0, "cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_maps(buffer.str());
  }

  std::string format_semigroup(Semigroup const& s, FileFormat format, std::string_view comment) {
    if (format == FileFormat::json) {
      nlohmann::json doc;
      doc["n"]    = s.degree();
      doc["maps"] = nlohmann::json::array();
      for (auto const& f : s) {
        auto row = nlohmann::json::array();
        for (auto x : f.images()) {
          row.push_back(x + 1);
        }
        doc["maps"].push_back(std::move(row));
      }
      return doc.dump() + "\n";
    }
    std::string out;
    if (!comment.empty()) {
      out += "# " + std::string(comment) + "\n";
    }
    out += "n " + std::to_string(s.degree()) + "\n";
    for (auto const& f : s) {
      out += to_string(f) + "\n";
    }
    return out;
  }

  void write_semigroup(std::filesystem::path const& path, Semigroup const& s, FileFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw std::runtime_error("cannot write " + path.string());
    }
    out << format_semigroup(s, format);
    if (!out) {
      throw std::runtime_error("error writing " + path.string());
    }
  }

}  // namespace nilsem
