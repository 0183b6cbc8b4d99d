#pragma once

#include "blc/colehopf.hpp"
#include "blc/control_signal.hpp"
#include "blc/entropy.hpp"
#include "blc/field.hpp"
#include "blc/flux.hpp"
#include "blc/grid.hpp"
#include "blc/io.hpp"
#include "blc/numerics.hpp"
#include "blc/parabolic.hpp"
#include "blc/params.hpp"
#include "blc/pipeline.hpp"
#include "blc/threading.hpp"
#include "blc/trajectory.hpp"
#include "blc/verify.hpp"
#include "blc/version.hpp"
#include "blc/viscous.hpp"
