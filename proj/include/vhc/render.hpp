#pragma once

#include <string>

#include "vhc/hook_config.hpp"

namespace vhc {

struct RenderOptions {
  /// Annotate each point with its roles: X descent bottom, Y SW endpoint,
  /// Z NE endpoint.
  bool labels = false;
  double unit = 40.0;
  double dot_radius = 5.0;
};

/// Standalone SVG with the plot drawn in mathematical orientation (row
/// heights grow upward). Output depends only on the configuration and options.
std::string render_svg(const HookConfig& c, const RenderOptions& opts = {});

/// A tikzpicture environment: filled dots, L-shaped hooks, optional labels.
std::string render_tikz(const HookConfig& c, const RenderOptions& opts = {});

/// Role letters of the point at `position`, in the order X, Y, Z.
std::string role_label(const HookConfig& c, int position);

}  // namespace vhc
