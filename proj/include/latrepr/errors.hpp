//  Copyright 2026 The latrepr Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef LATREPR_ERRORS_HPP_
#define LATREPR_ERRORS_HPP_

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include "latrepr/element_set.hpp"

namespace latrepr {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IndexOutOfRange : public Error {
 public:
  IndexOutOfRange(std::size_t index, std::size_t size)
      : Error("index " + std::to_string(index) + " out of range for carrier of size " +
              std::to_string(size)),
        index_(index), size_(size) {}
  std::size_t index() const { return index_; }
  std::size_t size() const { return size_; }

 private:
  std::size_t index_;
  std::size_t size_;
};

/// Two distinct elements that end up below each other after closure.
class CycleDetected : public Error {
 public:
  CycleDetected(Element a, Element b)
      : Error("cover relation has a cycle through " + std::to_string(a) + " and " +
              std::to_string(b)),
        pair_{a, b} {}
  std::pair<Element, Element> pair() const { return pair_; }

 private:
  std::pair<Element, Element> pair_;
};

class NotALattice : public Error {
 public:
  NotALattice(Element a, Element b, const std::string& what)
      : Error("pair (" + std::to_string(a) + "," + std::to_string(b) + ") has no " + what),
        pair_{a, b} {}
  std::pair<Element, Element> pair() const { return pair_; }

 private:
  std::pair<Element, Element> pair_;
};

class EmptyFactorList : public Error {
 public:
  EmptyFactorList() : Error("direct product of an empty factor list") {}
};

/// Raised where distributivity is a precondition; carries a triple (a,b,c)
/// with a∧(b∨c) != (a∧b)∨(a∧c).
class NotDistributive : public Error {
 public:
  explicit NotDistributive(std::array<Element, 3> triple, const std::string& prefix = "not distributive")
      : Error(prefix + ": witness triple (" + std::to_string(triple[0]) + "," +
              std::to_string(triple[1]) + "," + std::to_string(triple[2]) + ")"),
        triple_(triple) {}
  const std::array<Element, 3>& triple() const { return triple_; }

 private:
  std::array<Element, 3> triple_;
};

class NotRepresentable : public NotDistributive {
 public:
  explicit NotRepresentable(std::array<Element, 3> triple)
      : NotDistributive(triple, "not representable") {}
};

class NotPrime : public Error {
 public:
  explicit NotPrime(std::size_t index)
      : Error("set #" + std::to_string(index) + " is not a prime filter"), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

class NotDistinguishing : public Error {
 public:
  NotDistinguishing(Element a, Element b)
      : Error("no member separates " + std::to_string(a) + " and " + std::to_string(b)),
        pair_{a, b} {}
  std::pair<Element, Element> pair() const { return pair_; }

 private:
  std::pair<Element, Element> pair_;
};

class NotBoolean : public Error {
 public:
  NotBoolean() : Error("lattice is not a Boolean algebra") {}
};

class CarrierTooLarge : public Error {
 public:
  CarrierTooLarge(std::size_t size, std::size_t cap)
      : Error("carrier of size " + std::to_string(size) + " exceeds cap " + std::to_string(cap)),
        size_(size), cap_(cap) {}
  std::size_t size() const { return size_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t size_;
  std::size_t cap_;
};

class IsomorphismFailure : public Error {
 public:
  using Error::Error;
};

class MalformedInterval : public Error {
 public:
  using Error::Error;
};

class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class UnknownFamily : public Error {
 public:
  explicit UnknownFamily(const std::string& id) : Error("unknown family '" + id + "'") {}
};

}  // namespace latrepr

#endif  // LATREPR_ERRORS_HPP_
