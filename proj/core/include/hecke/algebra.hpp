#pragma once

#include <map>
#include <memory>
#include <string>

#include "hecke/module_level.hpp"
#include "hecke/reconstruct.hpp"

namespace hecke {

using Mod5Level = ModuleLevel<ModCoeffs>;
using ModVec = SVec<std::uint32_t>;

// All levels of the tower, built on demand.
//   n = 2, 3: exact tables from the rewrite engine
//   n = 4:    exact tables reconstructed from finite-field enumerations
//   n = 5:    per point, as a free A_4-module on the 240 generators
// With a resume file, the level-4 tables and the level-5 module images are
// stored after they are built and read back on the next run.
class Tower {
public:
    explicit Tower(int depth_limit = 32);

    void set_resume_file(std::string path);
    void set_verbose(bool v) { verbose_ = v; }

    RewriteEngine& engine(int n);
    std::shared_ptr<const ExactLevel> exact(int n);
    std::shared_ptr<const Level<ModCoeffs>> at_point(int n, const ModPoint& pt);
    std::shared_ptr<const Mod5Level> level5(const ModPoint& pt);

    // Normal form over R; rule engine for n <= 3, tables for n = 4.
    ExactVec reduce(int n, const Letters& w);

    // s_i -> s_i^-1 with the coefficient twist, multiplicative.
    ExactVec phi(int n, const ExactVec& x);
    // Reversal plus s_i -> s_i^-1 with the coefficient twist.
    ExactVec psi(int n, const ExactVec& x);
    // Reversal plus s_i -> s_i^-1 with coefficients left alone.
    ExactVec psi_untwisted(int n, const ExactVec& x);

    const ReconstructStats& reconstruct_stats() const { return rstats_; }
    const std::map<std::string, EnumStats>& enum_stats() const { return estats_; }

private:
    ExactVec word_map(int n, const ExactVec& x, bool reverse, bool twist);
    void load_resume();
    void save_resume();
    void log(const std::string& msg) const;

    int depth_limit_;
    bool verbose_ = false;
    std::string resume_path_;
    std::map<int, std::unique_ptr<RewriteEngine>> engines_;
    std::map<int, std::shared_ptr<const ExactLevel>> exact_;
    std::map<std::string, std::shared_ptr<const Level<ModCoeffs>>> points_;
    std::map<std::string, std::shared_ptr<const Mod5Level>> level5_;
    std::map<std::string, ModuleImages<ModCoeffs>> stored_images_;
    std::optional<std::vector<ExactMatrix>> stored_exact4_;
    ReconstructStats rstats_;
    std::map<std::string, EnumStats> estats_;
};

std::string point_key(const ModPoint& pt);

}  // namespace hecke
