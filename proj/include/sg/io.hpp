// Copyright 2026 The sgames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SG_IO_HPP
#define SG_IO_HPP

// Game documents: one UTF-8 JSON object per file.
//
//   {"players": 3, "form": "weighted", "quota": "3",
//    "weights": ["2", "1", "1"]}
//   {"players": 3, "form": "minimal_winning", "coalitions": [[1,2],[1,3]]}
//   {"players": 4, "form": "multi_weighted", "games": [
//       {"quota": "10", "weights": ["10","9","1","0"]}, ...]}
//
// Coalition member lists are ascending, 1-based and duplicate-free.
// Quota and weights accept JSON integers or decimal strings; emitted
// documents always use decimal strings so exact values survive.

#include <string>

#include <json.hpp>

#include "sg/game.hpp"

namespace sg {

/// Reads a game document. Structural problems (wrong fields, bad member
/// lists, players outside 1..64) throw ParseError; game-axiom violations
/// are left for validate().
SimpleGame parse_game_document(const nlohmann::json& document);

/// Parses the given JSON text. Throws ParseError on malformed JSON.
SimpleGame parse_game_text(const std::string& text);

/// Loads a document from a file ("-" reads stdin).
SimpleGame load_game_file(const std::string& path);

/// Canonical document for the game: coalition lists sorted by mask,
/// members ascending, big integers as decimal strings.
nlohmann::ordered_json game_to_document(const SimpleGame& game);

/// Arbitrary-precision integer from a decimal string; used for document
/// fields. Throws ParseError on anything but an optional '-' and digits.
BigInt parse_decimal(const std::string& text);

}  // namespace sg

#endif  // SG_IO_HPP
