#pragma once

#define MOTIVIC_VERSION "1.0.0"
