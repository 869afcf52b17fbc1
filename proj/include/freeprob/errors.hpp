#pragma once

#include <stdexcept>
#include <string>

namespace freeprob {

// Invalid argument combinations (order mismatch, m < k, word too long, ...).
class argument_error : public std::invalid_argument {
public:
    explicit argument_error(const std::string& what) : std::invalid_argument(what) {}
};

// Parameter outside the mathematical domain (b < -1, q outside (-1,1), ...).
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// Enumeration request beyond the configured caps.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// Reciprocal of a series with zero constant term.
class singularity_error : public domain_error {
public:
    explicit singularity_error(const std::string& what) : domain_error(what) {}
};

// Square-root jet requested off the principal branch (constant term != 1).
class branch_error : public domain_error {
public:
    explicit branch_error(const std::string& what) : domain_error(what) {}
};

// The converse solve at b = -1/2, where the rejected factor collapses to a
// Dirac mass and the moment recursion loses its unique solution.
class degenerate_branch_error : public domain_error {
public:
    explicit degenerate_branch_error(const std::string& what) : domain_error(what) {}
};

} // namespace freeprob
