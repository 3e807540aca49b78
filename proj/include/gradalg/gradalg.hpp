#pragma once

// Everything except the HTTP session layer (gradalg/session.hpp), which pulls
// in the vendored HTTP server.

#include "gradalg/category.hpp"
#include "gradalg/dynkin.hpp"
#include "gradalg/error.hpp"
#include "gradalg/explorer.hpp"
#include "gradalg/grassmannian_count.hpp"
#include "gradalg/intlin.hpp"
#include "gradalg/kgroup.hpp"
#include "gradalg/laurent.hpp"
#include "gradalg/models.hpp"
#include "gradalg/preprojective.hpp"
#include "gradalg/quiver.hpp"
#include "gradalg/ratlin.hpp"
#include "gradalg/seed.hpp"
#include "gradalg/seed_io.hpp"
#include "gradalg/weyl.hpp"
