import PyInstaller.__main__

from pyknotslopes import __version__

callArgs = (
    "--noconfirm",
    "--onefile",
    "--console",
    "--name",
    "pyknotslopes",
    "--clean",
    "pyknotslopes/__main__.py",
)

print(f"Building pyknotslopes v{__version__}")
PyInstaller.__main__.run(callArgs)
