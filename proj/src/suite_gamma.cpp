#include "suites.hpp"

namespace symcheck::detail {

std::optional<GammaSet> checked_gamma_set(CheckList& out, std::size_t dim, const RunConfig& config) {
  const std::string prefix = "gamma" + std::to_string(dim);
  std::optional<GammaOverride> override;
  if (config.tamper && config.tamper->dim == dim) override = config.tamper->override;

  // Identities are reported on the (possibly tampered) matrices independently
  // of whether construction succeeds, so a failure names the broken identity.
  GammaSet base = dim == 8 ? build_gamma8() : build_gamma4();
  if (override) {
    if (override->index == 5) {
      base.g5 = override->matrix;
    } else {
      base.g.at(override->index) = override->matrix;
    }
  }
  const auto identities = dim == 8 ? gamma8_identities(base.g, base.g5) : gamma4_identities(base.g, base.g5);
  for (const auto& ic : identities) {
    out.add(prefix + "-" + ic.key, ic.name, prefix + "/" + ic.key, [&] {
      std::string d = ic.detail;
      if (!ic.holds) d = "violated: " + ic.name + (d.empty() ? "" : " (" + d + ")");
      if (!ic.holds && !ic.enforced) d += " (reported, not enforced at construction)";
      return verdict(ic.holds, d);
    });
  }

  std::optional<GammaSet> gs;
  out.add(prefix + "-construction", "the " + std::to_string(dim) + "-dim set passes its enforced identities",
          prefix + "/construction", [&] {
            gs = dim == 8 ? build_gamma8(override) : build_gamma4(override);
            return pass();
          });
  return gs;
}

}  // namespace symcheck::detail
