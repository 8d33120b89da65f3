namespace ipclab {}
