from .bgk_tool import BgkTool
from .constants_tool import ConstantsTool
from .distortion_tool import DistortionTool
from .resolvent_tool import ResolventTool
from .spectrum_tool import SpectrumTool
from .verify_tool import VerifyTool

__all__ = [
    "BgkTool",
    "ConstantsTool",
    "DistortionTool",
    "ResolventTool",
    "SpectrumTool",
    "VerifyTool",
]
