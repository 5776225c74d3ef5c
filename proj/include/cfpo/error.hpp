#ifndef CFPO_ERROR_HPP
#define CFPO_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cfpo {

// Domain error with a stable machine-readable name (used by the CLI error
// objects) plus a human-readable message.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(name + ": " + message), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

[[noreturn]] inline void fail(const std::string& name, const std::string& message) {
  throw Error(name, message);
}

}  // namespace cfpo

#endif
