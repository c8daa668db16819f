/*
 * Copyright 2026 The braidhopf Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef BRAIDHOPF_ERROR_HPP
#define BRAIDHOPF_ERROR_HPP

#include <stdexcept>
#include <string>

namespace braidhopf {

enum class ErrorKind {
  shape,         // maps with the wrong domain/codomain for the requested role
  composition,   // codomain(f) != domain(g)
  degree,        // a matrix entry connects basis vectors of different degree
  precondition,  // an input failed its validator
  consistency,   // an identity that must hold for valid inputs did not
  field,         // arithmetic across fields, division by zero, bad literal
  parse,
  load,
  lookup,        // unknown or ambiguous name
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace braidhopf

#endif  // BRAIDHOPF_ERROR_HPP
