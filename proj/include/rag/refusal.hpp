#ifndef RAG_REFUSAL_HPP
#define RAG_REFUSAL_HPP

#include <stdexcept>
#include <string>

namespace rag {

// Input classified as outside the solvable scope (degenerate planes,
// non-ellipsoid objects, ...). CLI maps this to exit code 2.
struct InputRefusal : std::runtime_error {
  explicit InputRefusal(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rag

#endif
