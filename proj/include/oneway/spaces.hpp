#pragma once

#include <string>
#include <vector>

#include "oneway/prime_dim.hpp"

namespace oneway {

// Alphabets of a one-way communication task: inputs X on the sender side,
// questions Y and outputs B on the receiver side, and the dimension d of
// the single system (or dit) sent per round. Labels are free-form but must
// be nonempty and distinct within each alphabet.
class TaskSpaces {
 public:
  TaskSpaces(PrimeDim d, std::vector<std::string> x, std::vector<std::string> y,
             std::vector<std::string> b);

  const PrimeDim& d() const { return d_; }
  int dim() const { return d_.value(); }
  const std::vector<std::string>& X() const { return x_; }
  const std::vector<std::string>& Y() const { return y_; }
  const std::vector<std::string>& B() const { return b_; }
  std::size_t nx() const { return x_.size(); }
  std::size_t ny() const { return y_.size(); }
  std::size_t nb() const { return b_.size(); }

  // Index of a label; throws validation_error when absent.
  std::size_t x_index(const std::string& label) const;
  std::size_t y_index(const std::string& label) const;
  std::size_t b_index(const std::string& label) const;

  bool operator==(const TaskSpaces& o) const {
    return d_ == o.d_ && x_ == o.x_ && y_ == o.y_ && b_ == o.b_;
  }

 private:
  PrimeDim d_;
  std::vector<std::string> x_, y_, b_;
};

}  // namespace oneway
