#pragma once

#include <stdexcept>
#include <string>

namespace wdrd {

// Bad arguments, malformed files, violated preconditions. CLI exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A witness pair for a digraph that is not strongly connected.
class NotStronglyConnectedError : public InputError {
 public:
  NotStronglyConnectedError(int from, int to)
      : InputError("not strongly connected: no path from vertex " +
                    std::to_string(from) + " to vertex " + std::to_string(to)),
        from(from),
        to(to) {}
  int from;
  int to;
};

// Witness triple (u,v,w): u,v and v,w non-adjacent while u,w are adjacent,
// so the underlying graph is not complete multipartite.
class NonMultipartiteError : public InputError {
 public:
  NonMultipartiteError(int u, int v, int w)
      : InputError("non-adjacency is not transitive: vertices " +
                    std::to_string(u) + "," + std::to_string(v) + " and " +
                    std::to_string(v) + "," + std::to_string(w) +
                    " are non-adjacent but " + std::to_string(u) + "," +
                    std::to_string(w) + " are adjacent"),
        u(u),
        v(v),
        w(w) {}
  int u;
  int v;
  int w;
};

// A verified computation contradicts one of the classification results this
// library encodes. Surfaced loudly, never absorbed. CLI exit code 3.
class TheoremViolation : public std::runtime_error {
 public:
  explicit TheoremViolation(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace wdrd
