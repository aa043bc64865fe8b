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

// Semigroup files. Both formats are 1-based.
//
// Text:
//
//   # comment lines allowed
//   n 6
//   5 5 5 5 5 5
//   5 5 1 5 5 5
//
// JSON:
//
//   {"n": 6, "maps": [[5,5,5,5,5,5], [5,5,1,5,5,5]]}

#ifndef NILSEM_IO_HPP_
#define NILSEM_IO_HPP_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "nilsem/semigroup.hpp"
#include "nilsem/transform.hpp"

namespace nilsem {

  enum class FileFormat { text, json };

  // The contents of a semigroup file, not yet checked for closure.
  // Duplicate maps are kept as written.
  struct MapSet {
    std::size_t                 n = 0;
    std::vector<Transformation> maps;
  };

  // Detects the format from the first non-blank character ('{' means
  // JSON). Throws ParseError naming the offending line.
  MapSet parse_maps(std::string_view contents);

  // Throws ParseError if the file cannot be read or parsed.
  MapSet read_maps(std::filesystem::path const& path);

  std::string format_semigroup(Semigroup const& s, FileFormat format, std::string_view comment = {});

  // Throws std::runtime_error if the file cannot be written.
  void write_semigroup(std::filesystem::path const& path, Semigroup const& s, FileFormat format);

}  // namespace nilsem

#endif  // NILSEM_IO_HPP_
