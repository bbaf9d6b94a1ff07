#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hyperlsh/ann_index.hpp"
#include "hyperlsh/dataset.hpp"
#include "hyperlsh/experiments.hpp"

namespace hyperlsh {

// shortest decimal form that parses back to the same double
std::string format_double(double v);

// point files: one {"coords": [...], "id": n, "model": "ball"|"halfspace"}
// object per line
void write_points_jsonl(std::ostream& os, const Dataset& data);
Dataset read_points_jsonl(std::istream& is);
void save_points(const std::string& path, const Dataset& data);
Dataset load_points(const std::string& path);

// curve files: header d,n,R_hyp,r,c,p1_hat,p2_hat,rho_hat,one_over_c,n_near,n_far,seed;
// rows that failed their pair precondition carry nan probability fields
void write_rho_csv(std::ostream& os, std::size_t d, std::size_t n, double R_hyp, double r,
                   std::uint64_t seed, const std::vector<RhoRow>& rows);

// single-blob JSON serialization; load + save round-trips byte-identically
std::string index_to_json(const LshIndex& index);
LshIndex index_from_json(const std::string& text);
void save_index(const std::string& path, const LshIndex& index);
LshIndex load_index(const std::string& path);

}  // namespace hyperlsh
