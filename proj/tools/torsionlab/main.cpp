#include "app.hpp"

int main(int argc, char** argv) {
  cli::App app;
  cli::add_algebra_commands(app);
  cli::add_sympow_commands(&app.root(), app);
  cli::add_quat_commands(&app.root(), app);
  cli::add_local_commands(&app.root(), app);
  cli::add_manifold_commands(&app.root(), app);
  cli::add_ruelle_commands(&app.root(), app);
  return app.main(argc, argv);
}
